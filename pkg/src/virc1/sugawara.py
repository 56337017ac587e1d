"""Virasoro modes at c = 1 from normal-ordered products of Heisenberg modes.

``L_n = 1/2 sum_k :J_k J_{n-k}:`` with positive modes moved to the right
and ``J_0`` acting as the charge.  On a fixed level only finitely many terms
of the sum act nontrivially, so every matrix here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fock import FockVector, Partition, level_basis, apply_J_terms, basis_index, gram_diagonal
from .linalg import QMatrix, nullspace, vstack

CENTRAL_CHARGE = Fraction(1)


def central_term(n: int, c=CENTRAL_CHARGE) -> Fraction:
    """Coefficient ``c/12 * n(n^2 - 1)`` multiplying the identity in ``[L_n, L_{-n}]``."""
    return Fraction(c) * n * (n * n - 1) / 12


@dataclass(frozen=True)
class LevelOperator:
    """Matrix of the mode ``L_mode`` from ``source_level`` to ``source_level - mode``.

    When the target level is negative the matrix has zero rows.
    """

    charge: Fraction
    mode: int
    source_level: int
    matrix: QMatrix

    @property
    def target_level(self) -> int:
        return self.source_level - self.mode

    def __call__(self, v: FockVector) -> FockVector:
        if v.level != self.source_level or v.charge != self.charge:
            raise ValueError(f"operator acts on level {self.source_level}, got level {v.level}")
        if self.target_level < 0:
            return FockVector.zero(self.charge, 0)
        return FockVector(self.charge, self.target_level, tuple(self.matrix.apply(v.coefficients)))


def _contributing_pairs(n: int, level: int):
    """Normal-ordered pairs ``(left, right)`` of ``:J_k J_{n-k}:`` that can act on ``level``.

    A positive mode acting first must not exceed the level, so only
    ``k`` in ``[n - level, level]`` contributes.
    """
    for k in range(n - level, level + 1):
        a, b = k, n - k
        if a > 0 and b <= 0:
            a, b = b, a
        yield a, b


def _l_on_partition(n: int, charge: Fraction, p: Partition) -> dict[Partition, Fraction]:
    level = p.weight
    out: dict[Partition, Fraction] = {}
    for left, right in _contributing_pairs(n, level):
        inner = apply_J_terms(right, charge, {p: Fraction(1)})
        if not inner:
            continue
        for key, c in apply_J_terms(left, charge, inner).items():
            out[key] = out.get(key, 0) + c
    return {k: c / 2 for k, c in out.items() if c}


@lru_cache(maxsize=4096)
def _build_L_cached(n: int, charge: Fraction, level: int) -> LevelOperator:
    target = level - n
    source_basis = level_basis(level)
    if target < 0:
        return LevelOperator(charge, n, level, QMatrix(0, len(source_basis)))
    index = basis_index(target)
    columns = []
    for p in source_basis:
        image = _l_on_partition(n, charge, p)
        columns.append({index[k]: c for k, c in image.items()})
    return LevelOperator(charge, n, level, QMatrix.from_columns(len(index), columns))


def build_L(n: int, q, level: int) -> LevelOperator:
    """Exact matrix of ``L_n`` on level ``level`` of the charge-``q`` Fock space."""
    if level < 0:
        raise ValueError(f"negative level {level}")
    return _build_L_cached(n, Fraction(q), level)


def apply_L(n: int, v: FockVector) -> FockVector:
    return build_L(n, v.charge, v.level)(v)


@dataclass(frozen=True)
class CommutatorReport:
    n: int
    m: int
    charge: Fraction
    levels: tuple[int, ...]
    passed: bool
    counterexample: tuple[int, int, int] | None = None  # (level, row, col)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("pass must hold exactly when no counterexample is recorded")


def _mode_matrix(n: int, q: Fraction, level: int, rows: int) -> QMatrix:
    """Matrix of L_n from ``level``; zero map with ``rows`` rows when ``level`` is negative."""
    if level < 0:
        return QMatrix(rows, 0)
    return build_L(n, q, level).matrix


def commutator_difference(n: int, m: int, q, level: int) -> QMatrix:
    """``[L_n, L_m] - (n-m) L_{n+m} - central`` on one level; zero iff the relation holds."""
    q = Fraction(q)
    target = level - n - m
    src_dim = len(level_basis(level))
    if target < 0:
        return QMatrix(0, src_dim)
    tgt_dim = len(level_basis(target))
    mid_m, mid_n = level - m, level - n

    def product(first: int, second: int, mid: int) -> QMatrix:
        if mid < 0:
            return QMatrix(tgt_dim, src_dim)
        return build_L(second, q, mid).matrix @ build_L(first, q, level).matrix

    lhs = product(m, n, mid_m) - product(n, m, mid_n)
    rhs = (n - m) * build_L(n + m, q, level).matrix
    if n + m == 0:
        rhs = rhs + QMatrix.identity(src_dim).scale(central_term(n))
    return lhs - rhs


def commutator_check(n: int, m: int, q, max_level: int) -> CommutatorReport:
    """Check ``[L_n, L_m] = (n-m) L_{n+m} + n(n^2-1)/12 delta_{n+m,0}`` exactly."""
    q = Fraction(q)
    levels = tuple(range(max_level + 1))
    for level in levels:
        diff = commutator_difference(n, m, q, level)
        if not diff.is_zero():
            (row, col), _ = min(diff.items())
            return CommutatorReport(n, m, q, levels, False, (level, row, col))
    return CommutatorReport(n, m, q, levels, True)


def adjoint_check(n: int, q, max_level: int) -> bool:
    """Check that ``L_n`` and ``L_{-n}`` are adjoint for the Fock form on all levels."""
    q = Fraction(q)
    for level in range(max_level + 1):
        target = level - n
        if target < 0:
            continue
        gram_src = QMatrix.diagonal(gram_diagonal(level))
        gram_tgt = QMatrix.diagonal(gram_diagonal(target))
        forward = build_L(n, q, level).matrix
        backward = build_L(-n, q, target).matrix
        if gram_tgt @ forward != backward.T @ gram_src:
            return False
    return True


def find_lowest_weight_vectors(q, level: int) -> list[FockVector]:
    """Basis of the joint kernel of ``L_1`` and ``L_2`` on one level of ``F_q``.

    These are the Virasoro lowest-weight vectors of weight ``q^2/2 + level``.
    """
    q = Fraction(q)
    dim = len(level_basis(level))
    stacked = vstack([build_L(1, q, level).matrix, build_L(2, q, level).matrix], dim)
    return [FockVector(q, level, tuple(v)) for v in nullspace(stacked)]


def lowest_weight_census(q, max_level: int) -> list[int]:
    """Joint-kernel dimension at each level ``0..max_level``."""
    return [len(find_lowest_weight_vectors(q, level)) for level in range(max_level + 1)]
