"""Virasoro Verma modules M(c, h) and their Shapovalov forms.

A PBW monomial is stored as a :class:`Partition` ``(l1, ..., lk)`` and stands
for ``L_{-l1} ... L_{-lk} v`` with ``l1 >= ... >= lk``.  Elements are sparse
dicts ``{Partition: Fraction}``.  Degeneracy is detected directly from exact
determinants and kernels rather than from a closed determinant formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .characters import Character, QSeries, partition_series
from .errors import DomainError
from .fock import Partition, level_basis
from .linalg import QMatrix, determinant, nullspace


@dataclass(frozen=True)
class LowestWeight:
    c: Fraction
    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "h", Fraction(self.h))
        if self.h < 0:
            raise DomainError(f"lowest weight must be nonnegative, got {self.h}")


def _add_into(acc: dict, terms: dict, scale=1) -> None:
    for k, v in terms.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class VermaModule:
    """Mode action on the PBW basis of ``M(c, h)``, memoized per monomial."""

    def __init__(self, c, h):
        self.weight = LowestWeight(c, h)
        self.c = self.weight.c
        self.h = self.weight.h
        self._cache: dict[tuple[int, Partition], dict] = {}

    def act(self, n: int, element: dict) -> dict:
        out: dict = {}
        for p, coeff in element.items():
            _add_into(out, self.act_on_monomial(n, p), coeff)
        return out

    def act_on_monomial(self, n: int, p: Partition) -> dict:
        key = (n, p)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._compute(n, p)
        self._cache[key] = result
        return result

    def _compute(self, n: int, p: Partition) -> dict:
        if n == 0:
            e = self.h + p.weight
            return {p: e} if e else {}
        if n < 0:
            b = -n
            if not p or b >= p[0]:
                return {tuple.__new__(Partition, (b,) + tuple(p)): Fraction(1)}
            # L_{-b} L_{-a} R = L_{-a} L_{-b} R + (a - b) L_{-(a+b)} R, with b < a
            a = p[0]
            rest = tuple.__new__(Partition, p[1:])
            out: dict = {}
            _add_into(out, self.act(-a, self.act_on_monomial(-b, rest)))
            _add_into(out, self.act_on_monomial(-(a + b), rest), a - b)
            return out
        if not p:
            return {}
        # L_n L_{-a} R = L_{-a} L_n R + (n + a) L_{n-a} R + delta_{n,a} c/12 (n^3 - n) R
        a = p[0]
        rest = tuple.__new__(Partition, p[1:])
        out = {}
        _add_into(out, self.act(-a, self.act_on_monomial(n, rest)))
        _add_into(out, self.act_on_monomial(n - a, rest), n + a)
        if n == a:
            _add_into(out, {rest: Fraction(1)}, self.c * (n**3 - n) / 12)
        return out

    def pairing(self, left: Partition, right: Partition) -> Fraction:
        """``<L_{-left} v, L_{-right} v>`` with ``<v, v> = 1``."""
        if left.weight != right.weight:
            return Fraction(0)
        element = {right: Fraction(1)}
        for part in left:
            element = self.act(part, element)
            if not element:
                return Fraction(0)
        return element.get(Partition(), Fraction(0))


@lru_cache(maxsize=64)
def _module(c: Fraction, h: Fraction) -> VermaModule:
    return VermaModule(c, h)


@dataclass(frozen=True)
class ShapovalovMatrix:
    weight: LowestWeight
    level: int
    matrix: QMatrix

    @property
    def basis(self) -> list[Partition]:
        return list(level_basis(self.level))

    def determinant(self) -> Fraction:
        return determinant(self.matrix)


def gram_matrix(w: LowestWeight, level: int) -> ShapovalovMatrix:
    """Gram matrix of the level-``level`` PBW basis of ``M(c, h)``."""
    if level < 0:
        raise DomainError(f"negative level {level}")
    module = _module(w.c, w.h)
    basis = level_basis(level)
    data = {}
    for i, lam in enumerate(basis):
        for j in range(i, len(basis)):
            x = module.pairing(lam, basis[j])
            if x:
                data[i, j] = x
                data[j, i] = x
    return ShapovalovMatrix(w, level, QMatrix(len(basis), len(basis), data))


def kernel(m: ShapovalovMatrix) -> list[list[Fraction]]:
    """Exact null-space basis; vectors are PBW coefficient vectors of singular vectors."""
    return nullspace(m.matrix)


@dataclass(frozen=True)
class DegeneracyClass:
    """``j`` is ``None`` for a generic weight, else the half-integer with ``h = j**2``."""

    j: Fraction | None = None

    @property
    def degenerate(self) -> bool:
        return self.j is not None

    @property
    def singular_level(self) -> int | None:
        return None if self.j is None else int(2 * self.j + 1)

    def __str__(self) -> str:
        return "Generic" if self.j is None else f"Degenerate(j={self.j})"


def classify(h) -> DegeneracyClass:
    """Degenerate exactly when ``4h`` is the square of a nonnegative integer."""
    h = Fraction(h)
    if h < 0:
        raise DomainError(f"lowest weight must be nonnegative, got {h}")
    four_h = 4 * h
    if four_h.denominator != 1:
        return DegeneracyClass()
    root = isqrt(four_h.numerator)
    if root * root != four_h.numerator:
        return DegeneracyClass()
    return DegeneracyClass(Fraction(root, 2))


def irreducible_character(h, order: int) -> Character:
    """Character of the irreducible c = 1 module of lowest weight ``h``.

    ``t^h p(t)`` for generic ``h``; ``t^(j^2) (1 - t^(2j+1)) p(t)`` when ``h = j^2``.
    """
    h = Fraction(h)
    cls = classify(h)
    if order < 0:
        raise DomainError(f"negative order {order}")
    p = partition_series(order).coefficients
    if cls.degenerate:
        s = cls.singular_level
        coeffs = tuple(p[n] - (p[n - s] if n >= s else 0) for n in range(order + 1))
    else:
        coeffs = p
    return Character(h, QSeries(coeffs, order))
