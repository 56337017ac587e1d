"""Truncated q-series, Fock and Virasoro characters, and greedy branching.

A :class:`Character` is ``t^offset * sum_n a_n t^n`` known exactly for
``n <= order``.  Coefficients beyond the order are unknown, never zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InconsistentBranchingError, SectorMismatchError, StructuralError


@dataclass(frozen=True)
class QSeries:
    coefficients: tuple[int, ...]
    order: int

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if self.order < 0:
            raise StructuralError(f"negative truncation order {self.order}")
        if len(coeffs) != self.order + 1:
            raise StructuralError(f"{len(coeffs)} coefficients for order {self.order}")
        object.__setattr__(self, "coefficients", coeffs)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside trusted range 0..{self.order}")
        return self.coefficients[n]

    def truncate(self, order: int) -> QSeries:
        order = min(order, self.order)
        return QSeries(self.coefficients[: order + 1], order)

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(tuple(a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients)), n)

    def __sub__(self, other: QSeries) -> QSeries:
        return self + other.scale(-1)

    def scale(self, k: int) -> QSeries:
        return QSeries(tuple(k * a for a in self.coefficients), self.order)

    def __mul__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return QSeries(tuple(out), n)


@lru_cache(maxsize=None)
def _partition_numbers(order: int) -> tuple[int, ...]:
    # expand prod_{k>=1} 1/(1 - t^k) one factor at a time
    p = [1] + [0] * order
    for k in range(1, order + 1):
        for n in range(k, order + 1):
            p[n] += p[n - k]
    return tuple(p)


def partition_series(order: int) -> QSeries:
    """``p(t) = prod_{n>=1} (1 - t^n)^-1`` through ``t^order``."""
    if order < 0:
        raise DomainError(f"negative order {order}")
    return QSeries(_partition_numbers(order), order)


@dataclass(frozen=True)
class Character:
    offset: Fraction
    series: QSeries

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.offset < 0:
            raise DomainError(f"negative character offset {self.offset}")

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def top(self) -> Fraction:
        """Largest exponent of ``t`` whose coefficient is known."""
        return self.offset + self.series.order

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.series.coefficients

    def is_zero(self) -> bool:
        return not any(self.series.coefficients)

    def coefficient_at(self, exponent) -> int:
        shift = Fraction(exponent) - self.offset
        if shift.denominator != 1 or not 0 <= shift <= self.order:
            raise IndexError(f"exponent {exponent} not in trusted range of {self}")
        return self.series.coefficients[int(shift)]

    def scale(self, k: int) -> Character:
        return Character(self.offset, self.series.scale(k))

    def normalized(self) -> Character:
        """Shift the offset up to the first nonzero coefficient."""
        coeffs = self.series.coefficients
        lead = next((i for i, a in enumerate(coeffs) if a), None)
        if not lead:
            return self
        return Character(self.offset + lead, QSeries(coeffs[lead:], self.order - lead))

    def __str__(self) -> str:
        return f"t^({self.offset}) * {list(self.series.coefficients)} + O(t^{self.order + 1})"


def fock_character(q, order: int) -> Character:
    """``chi_q(t) = t^(q^2/2) p(t)``."""
    q = Fraction(q)
    return Character(q * q / 2, partition_series(order))


def combine(a: Character, b: Character, sign: int = 1) -> Character:
    """``a + sign * b`` aligned on a common offset, truncated to the common trusted range."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    gap = b.offset - a.offset
    if gap.denominator != 1:
        raise SectorMismatchError(f"offsets {a.offset} and {b.offset} differ by a non-integer")
    low = min(a.offset, b.offset)
    top = min(a.top, b.top)
    if top < low:
        raise SectorMismatchError("characters have no common trusted range")
    order = int(top - low)
    out = [0] * (order + 1)
    for ch, s in ((a, 1), (b, sign)):
        shift = int(ch.offset - low)
        for i, x in enumerate(ch.series.coefficients):
            if shift + i > order:
                break
            out[shift + i] += s * x
    return Character(low, QSeries(tuple(out), order)).normalized()


def _irreducible(h, order):
    from .verma import irreducible_character

    return irreducible_character(h, order)


@dataclass(frozen=True)
class LedgerRow:
    exponent: int
    fock: int
    contributions: tuple[tuple[int, int], ...]  # (j, coefficient of t^exponent in chi^{j^2})
    residual: int


@dataclass(frozen=True)
class DecompositionReport:
    order: int
    rows: tuple[LedgerRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.residual == 0 for r in self.rows)


def verify_vacuum_decomposition(order: int) -> DecompositionReport:
    """Compare ``chi_0`` with ``sum_{j^2 <= order} chi^{j^2}`` coefficient by coefficient."""
    if order < 0:
        raise DomainError(f"negative order {order}")
    vacuum = fock_character(0, order)
    parts = []
    j = 0
    while j * j <= order:
        parts.append((j, _irreducible(j * j, order - j * j)))
        j += 1
    rows = []
    for n in range(order + 1):
        contrib = tuple((j, ch.coefficient_at(n)) for j, ch in parts if j * j <= n)
        total = vacuum.coefficient_at(n)
        rows.append(LedgerRow(n, total, contrib, total - sum(c for _, c in contrib)))
    return DecompositionReport(order, tuple(rows))


@dataclass(frozen=True)
class BranchingResult:
    components: tuple[tuple[Fraction, int], ...]
    residual: Character
    order: int  # relative to the input offset

    def __post_init__(self):
        hs = [h for h, _ in self.components]
        if hs != sorted(set(hs)):
            raise StructuralError("branching weights must be distinct and sorted")
        if any(m <= 0 for _, m in self.components):
            raise StructuralError("branching multiplicities must be positive")

    @property
    def succeeded(self) -> bool:
        return self.residual.is_zero()

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.components)


def branch(ch: Character, order: int | None = None) -> BranchingResult:
    """Decompose ``ch`` into irreducible c = 1 Virasoro characters by lowest-term peeling.

    Irreducible characters have leading coefficient 1, so the multiplicity at
    the lowest surviving exponent is forced.  Everything is computed up to
    ``ch.offset + order``; each subtracted character is expanded to exactly
    that cutoff so the trusted range never shrinks.
    """
    if order is None:
        order = ch.order
    if order < 0:
        raise DomainError(f"negative order {order}")
    if any(a < 0 for a in ch.series.coefficients):
        raise InconsistentBranchingError("input character has negative coefficients")
    order = min(order, ch.order)
    top = ch.offset + order
    coeffs = list(ch.series.coefficients[: order + 1])
    found = []
    i = 0
    while i <= order:
        a = coeffs[i]
        if a == 0:
            i += 1
            continue
        h = ch.offset + i
        irr = _irreducible(h, order - i).series.coefficients
        for k, x in enumerate(irr):
            coeffs[i + k] -= a * x
            if coeffs[i + k] < 0:
                raise InconsistentBranchingError(
                    f"negative coefficient at t^{h + k} after removing {a} x chi^{h}"
                )
        found.append((h, a))
    residual = Character(ch.offset, QSeries(tuple(coeffs), order))
    assert residual.top == top
    return BranchingResult(tuple(found), residual, order)
