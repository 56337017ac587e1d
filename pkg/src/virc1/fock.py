"""Charged bosonic Fock spaces and the Heisenberg mode action.

The Fock space of charge ``q`` is spanned by the vectors
``J_{-l1} ... J_{-lk} |q>`` for partitions ``l1 >= ... >= lk > 0``.
The level of such a vector is the weight of its partition.  Modes satisfy
``[J_n, J_m] = n delta_{n+m,0}``, ``J_0 = q`` and ``J_n |q> = 0`` for
``n > 0``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .errors import DomainError, StructuralError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise StructuralError(f"parts must be positive integers, got {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise StructuralError(f"parts must be non-increasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def add_part(self, k: int) -> Partition:
        """Insert a part ``k``, keeping the parts sorted."""
        parts = list(self)
        i = 0
        while i < len(parts) and parts[i] >= k:
            i += 1
        parts.insert(i, k)
        return tuple.__new__(Partition, parts)

    def remove_part(self, k: int) -> Partition:
        parts = list(self)
        parts.remove(k)
        return tuple.__new__(Partition, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def level_basis(n: int) -> tuple[Partition, ...]:
    return tuple(tuple.__new__(Partition, p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in canonical order.

    The canonical order is lexicographic on the part lists, largest first:
    ``4 > 3+1 > 2+2 > 2+1+1 > 1+1+1+1``.
    """
    if n < 0:
        raise DomainError(f"partitions of a negative integer ({n})")
    return list(level_basis(n))


@lru_cache(maxsize=None)
def basis_index(n: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(level_basis(n))}


def norm_squared(p: Partition) -> int:
    """``<J_{-p}|q>, J_{-p}|q>>`` = prod over parts k of k**m_k * m_k!."""
    out = 1
    for k, m in Counter(p).items():
        out *= k**m * factorial(m)
    return out


@dataclass(frozen=True)
class FockLevelSpace:
    charge: Fraction
    level: int

    def __post_init__(self):
        if self.level < 0:
            raise DomainError(f"negative level {self.level}")
        object.__setattr__(self, "charge", Fraction(self.charge))

    @property
    def basis(self) -> list[Partition]:
        return enumerate_partitions(self.level)

    @property
    def dimension(self) -> int:
        return len(level_basis(self.level))

    @property
    def l0_eigenvalue(self) -> Fraction:
        return self.charge**2 / 2 + self.level

    def basis_vector(self, p) -> FockVector:
        p = Partition(p)
        if p.weight != self.level:
            raise DomainError(f"{p!r} does not have weight {self.level}")
        return FockVector.from_terms(self.charge, self.level, {p: 1})

    def zero(self) -> FockVector:
        return FockVector.zero(self.charge, self.level)


@dataclass(frozen=True)
class FockVector:
    """Coefficient vector over the canonical basis of one level of F_q."""

    charge: Fraction
    level: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.level < 0:
            raise StructuralError(f"negative level {self.level}")
        object.__setattr__(self, "charge", Fraction(self.charge))
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != len(level_basis(self.level)):
            raise StructuralError(
                f"{len(coeffs)} coefficients for level {self.level} "
                f"(dimension {len(level_basis(self.level))})"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, charge, level: int) -> FockVector:
        if level < 0:
            raise StructuralError(f"negative level {level}")
        return cls(charge, level, (Fraction(0),) * len(level_basis(level)))

    @classmethod
    def lowest_weight(cls, charge) -> FockVector:
        """The vector ``|q>``; at charge 0 this is the vacuum."""
        return cls(charge, 0, (Fraction(1),))

    @classmethod
    def from_terms(cls, charge, level: int, terms: Mapping) -> FockVector:
        index = basis_index(level)
        coeffs = [Fraction(0)] * len(index)
        for p, c in terms.items():
            p = Partition(p)
            if p not in index:
                raise StructuralError(f"{p!r} is not a partition of {level}")
            coeffs[index[p]] += Fraction(c)
        return cls(charge, level, tuple(coeffs))

    def terms(self) -> dict[Partition, Fraction]:
        basis = level_basis(self.level)
        return {basis[i]: c for i, c in enumerate(self.coefficients) if c}

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check_compatible(self, other: FockVector) -> None:
        if self.charge != other.charge or self.level != other.level:
            raise DomainError(
                f"vectors live in different spaces: (q={self.charge}, level={self.level}) "
                f"vs (q={other.charge}, level={other.level})"
            )

    def __add__(self, other: FockVector) -> FockVector:
        self._check_compatible(other)
        return FockVector(self.charge, self.level,
                          tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other.scale(-1)

    def scale(self, c) -> FockVector:
        c = Fraction(c)
        return FockVector(self.charge, self.level, tuple(c * a for a in self.coefficients))

    def __rmul__(self, c) -> FockVector:
        return self.scale(c)

    def __neg__(self) -> FockVector:
        return self.scale(-1)


def apply_J_terms(m: int, charge: Fraction, terms: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    """Mode ``J_m`` on a sparse combination of basis partitions."""
    out: dict[Partition, Fraction] = {}
    if m < 0:
        for p, c in terms.items():
            key = p.add_part(-m)
            out[key] = out.get(key, 0) + c
    elif m == 0:
        if charge:
            out = {p: charge * c for p, c in terms.items()}
    else:
        for p, c in terms.items():
            r = p.count(m)
            if r:
                key = p.remove_part(m)
                out[key] = out.get(key, 0) + m * r * c
    return {p: c for p, c in out.items() if c}


def apply_J(m: int, v: FockVector) -> FockVector:
    """Apply the Heisenberg mode ``J_m`` to ``v``.

    Creation modes (``m < 0``) raise the level by ``-m``; ``J_0`` multiplies
    by the charge; annihilation modes lower the level by ``m`` and give the
    zero vector at level 0 when ``m`` exceeds the level of ``v``.
    """
    if not isinstance(v, FockVector):
        raise StructuralError(f"expected a FockVector, got {type(v).__name__}")
    if len(v.coefficients) != len(level_basis(v.level)):
        raise StructuralError("coefficient length does not match the level dimension")
    target = v.level - m
    if target < 0:
        return FockVector.zero(v.charge, 0)
    return FockVector.from_terms(v.charge, target, apply_J_terms(m, v.charge, v.terms()))


def inner_product(v: FockVector, w: FockVector) -> Fraction:
    """Contravariant form with ``<q|q> = 1`` and ``J_n`` adjoint to ``J_{-n}``.

    The canonical basis is orthogonal for this form.
    """
    v._check_compatible(w)
    basis = level_basis(v.level)
    return sum(
        (a * b * norm_squared(basis[i])
         for i, (a, b) in enumerate(zip(v.coefficients, w.coefficients)) if a and b),
        Fraction(0),
    )


def gram_diagonal(level: int) -> list[int]:
    """Diagonal of the Gram matrix of the level basis, in canonical order."""
    return [norm_squared(p) for p in level_basis(level)]
