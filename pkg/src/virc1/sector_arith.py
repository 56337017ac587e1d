"""Statistical dimensions and global indices over the extended nonnegative rationals.

:class:`Dim` is either a finite nonnegative rational or ``INFINITE``.
Infinity absorbs sums and products with nonzero values; ``0 * INFINITE``
is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, DomainError, OutOfHypothesisError
from .verma import classify

_INFINITE_WORDS = {"inf", "infinite", "infinity", "oo", "∞"}


@dataclass(frozen=True, eq=False)
class Dim:
    value: Fraction | None  # None means infinite

    def __post_init__(self):
        if self.value is not None:
            v = Fraction(self.value)
            if v < 0:
                raise DomainError(f"dimensions are nonnegative, got {v}")
            object.__setattr__(self, "value", v)

    @classmethod
    def finite(cls, x) -> Dim:
        return cls(Fraction(x))

    @classmethod
    def parse(cls, text) -> Dim:
        """Parse ``"inf"``, an integer, or ``"p/q"``; anything else is rejected."""
        if isinstance(text, Dim):
            return text
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            return cls(Fraction(text))
        s = str(text).strip()
        if s.lower() in _INFINITE_WORDS:
            return INFINITE
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"not an exact rational or 'inf': {text!r}") from None
        return cls(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other) -> Dim:
        other = Dim.parse(other)
        if self.is_infinite or other.is_infinite:
            return INFINITE
        return Dim(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other) -> Dim:
        other = Dim.parse(other)
        if self.is_infinite or other.is_infinite:
            if self.value == 0 or other.value == 0:
                raise DomainError("0 * infinity is undefined")
            return INFINITE
        return Dim(self.value * other.value)

    __rmul__ = __mul__

    def square(self) -> Dim:
        return self * self

    def __sub__(self, other) -> Dim:
        other = Dim.parse(other)
        if other.is_infinite:
            raise DomainError("cannot subtract an infinite dimension")
        if self.is_infinite:
            return INFINITE
        return Dim(self.value - other.value)

    def _key(self):
        return (1, 0) if self.is_infinite else (0, self.value)

    def __eq__(self, other) -> bool:
        try:
            other = Dim.parse(other)
        except DomainError:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("Dim", self.value))

    def __lt__(self, other) -> bool:
        return self._key() < Dim.parse(other)._key()

    def __le__(self, other) -> bool:
        return self._key() <= Dim.parse(other)._key()

    def __gt__(self, other) -> bool:
        return self._key() > Dim.parse(other)._key()

    def __ge__(self, other) -> bool:
        return self._key() >= Dim.parse(other)._key()

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)

    def __repr__(self) -> str:
        return "Dim(inf)" if self.is_infinite else f"Dim({self.value})"


INFINITE = Dim(None)
ONE = Dim(Fraction(1))


def _sector_dim(d, what: str = "dimension") -> Dim:
    d = Dim.parse(d)
    if d < ONE:
        raise DomainError(f"{what} must be >= 1, got {d}")
    return d


@dataclass(frozen=True)
class SectorTable:
    entries: tuple[tuple[str, Dim], ...]
    vacuum: str = "vacuum"

    def __post_init__(self):
        entries = tuple((str(label), _sector_dim(d)) for label, d in self.entries)
        labels = [label for label, _ in entries]
        if len(set(labels)) != len(labels):
            raise DomainError("sector labels must be unique")
        found = dict(entries)
        if self.vacuum not in found:
            raise DomainError(f"vacuum sector {self.vacuum!r} missing")
        if found[self.vacuum] != ONE:
            raise DomainError("the vacuum sector has dimension 1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_dims(cls, dims: Sequence) -> SectorTable:
        """First entry is the vacuum; the rest are labelled ``pi_1, pi_2, ...``."""
        labels = ["vacuum"] + [f"pi_{i}" for i in range(1, len(dims))]
        return cls(tuple(zip(labels, dims)))

    @property
    def dims(self) -> list[Dim]:
        return [d for _, d in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def restricted_dimension(index, d) -> Dim:
    """Dimension of the restriction to a subsystem: index times ``d``."""
    return _sector_dim(index, "index") * _sector_dim(d)


def global_index(table: SectorTable) -> Dim:
    """Sum of squared dimensions over all sectors."""
    total = Dim(Fraction(0))
    for d in table.dims:
        total = total + d.square()
    return total


def subsystem_global_index(index, mu_A) -> Dim:
    """Global index of a finite-index subsystem: ``index**2 * mu_A``."""
    index = _sector_dim(index, "index")
    if index.is_infinite:
        raise OutOfHypothesisError("the subsystem index formula is stated for finite index only")
    return index.square() * _sector_dim(mu_A, "global index")


@dataclass(frozen=True)
class UntwistedGrouping:
    """Dimensions of untwisted subsystem sectors grouped by the ambient sector they first occur in.

    ``groups[0]`` belongs to the vacuum restriction.  ``index`` defaults to
    the total of ``groups[0]``, which is the vacuum restriction's dimension
    when it is multiplicity free.
    """

    groups: tuple[tuple[Dim, ...], ...]
    index: Dim | None = None

    def __post_init__(self):
        groups = tuple(tuple(_sector_dim(d) for d in g) for g in self.groups)
        if not groups or any(not g for g in groups):
            raise DomainError("groups must be nonempty")
        object.__setattr__(self, "groups", groups)
        if self.index is None:
            object.__setattr__(self, "index", sum(groups[0], Dim(Fraction(0))))
        else:
            object.__setattr__(self, "index", _sector_dim(self.index, "index"))


def twisted_lower_bound(g: UntwistedGrouping, mu_A=None, sector_dims_of_A: SectorTable | None = None) -> Dim:
    """Lower bound on the twisted part of the subsystem global index.

    Returns ``sum_i (sum_{U_i} d)^2 - sum_i sum_{U_i} d^2``.  Each group
    contributes a nonnegative amount, so the bound is at least the vacuum
    group's share, which is >= 2 as soon as that group has two members.
    """
    if g.index.is_infinite:
        raise OutOfHypothesisError("the twisted-sector bound needs a finite index")
    if any(d.is_infinite for grp in g.groups for d in grp):
        raise DomainError("untwisted sectors of a finite-index subsystem have finite dimension")
    if sector_dims_of_A is not None:
        if len(sector_dims_of_A) != len(g.groups):
            raise ConsistencyError(
                f"{len(g.groups)} groups for {len(sector_dims_of_A)} sectors of the ambient net"
            )
        if mu_A is not None and Dim.parse(mu_A) != global_index(sector_dims_of_A):
            raise ConsistencyError(f"mu_A = {mu_A} disagrees with the sector table")
        for i, (grp, d) in enumerate(zip(g.groups, sector_dims_of_A.dims)):
            total = sum(grp, Dim(Fraction(0)))
            bound = restricted_dimension(g.index, d)
            if total > bound:
                raise ConsistencyError(
                    f"group {i} totals {total}, more than the restricted dimension {bound}"
                )
    bound = Fraction(0)
    for grp in g.groups:
        s = sum(d.value for d in grp)
        bound += s * s - sum(d.value ** 2 for d in grp)
    return Dim(bound)


@dataclass(frozen=True)
class DimensionWitness:
    dimension: Dim
    conclusive: bool


def infinite_dimension_criterion(index, restriction_irreducible: bool) -> DimensionWitness:
    """Infinite index plus irreducible restriction gives an infinite-dimensional sector.

    Otherwise ``index * 1`` is returned as a lower-bound witness, flagged as
    not conclusive.
    """
    index = _sector_dim(index, "index")
    if index.is_infinite and restriction_irreducible:
        return DimensionWitness(INFINITE, True)
    return DimensionWitness(restricted_dimension(index, ONE), False)


VACUUM_DECOMPOSITION = "vacuum_decomposition: chi_0 = sum_j chi^(j^2), so [A : A_Vir] = inf"
IRREDUCIBLE_RESTRICTION = "irreducible_restriction: h = q^2/2 with q not in Z/sqrt(2), so pi_h = alpha_q restricted"
INFINITE_CRITERION = "infinite_dimension_criterion: infinite index and irreducible restriction, so d(pi_h) = inf"
DEGENERATE_WEIGHT = "degenerate_weight: h = j^2 with j in Z/2"
REPORTED_INTEGER = "reported_dimension: d(pi_h) = 2|j| + 1, established for integer j"
REPORTED_HALF_INTEGER = "reported_dimension: d(pi_h) = 2|j| + 1, expected but unproved for half-integer j"


@dataclass(frozen=True)
class Verdict:
    h: Fraction
    dimension: Dim
    conjectural: bool
    justification: tuple[str, ...]

    def __post_init__(self):
        if not self.justification:
            raise DomainError("a verdict needs a justification")

    @property
    def reported(self) -> bool:
        return self.dimension.is_finite


def c1_continuum_verdict(h) -> Verdict:
    """Statistical dimension of the c = 1 Virasoro sector of lowest weight ``h``."""
    h = Fraction(h)
    cls = classify(h)
    if not cls.degenerate:
        # infinite index from the vacuum decomposition; irreducible restriction
        # of the charge-q Fock representation with h = q^2/2
        witness = infinite_dimension_criterion(INFINITE, restriction_irreducible=True)
        assert witness.conclusive
        return Verdict(h, witness.dimension, False,
                       (VACUUM_DECOMPOSITION, IRREDUCIBLE_RESTRICTION, INFINITE_CRITERION))
    j = cls.j
    d = Dim(2 * j + 1)
    if j.denominator == 1:
        return Verdict(h, d, False, (DEGENERATE_WEIGHT, REPORTED_INTEGER))
    return Verdict(h, d, True, (DEGENERATE_WEIGHT, REPORTED_HALF_INTEGER))
