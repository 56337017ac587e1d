"""Sparse matrices over the rationals and exact Gaussian elimination.

Entries are :class:`fractions.Fraction`; zero entries are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import StructuralError


class QMatrix:
    """Immutable sparse matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Mapping[tuple[int, int], Fraction] | None = None):
        if rows < 0 or cols < 0:
            raise StructuralError(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), x in (data or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise StructuralError(f"entry ({i}, {j}) outside shape ({rows}, {cols})")
            if x:
                clean[i, j] = Fraction(x)
        self._data = clean

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def diagonal(cls, entries: Sequence) -> QMatrix:
        n = len(entries)
        return cls(n, n, {(i, i): Fraction(x) for i, x in enumerate(entries)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> QMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise StructuralError("ragged rows")
            for j, x in enumerate(row):
                if x:
                    data[i, j] = Fraction(x)
        return cls(nrows, ncols, data)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction]]) -> QMatrix:
        """Build from a list of sparse columns ``{row_index: value}``."""
        data = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                data[i, j] = x
        return cls(nrows, len(columns), data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def items(self):
        return self._data.items()

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._data.get((i, j), Fraction(0))

    def nnz(self) -> int:
        return len(self._data)

    def is_zero(self) -> bool:
        return not self._data

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), x in self._data.items():
            out[i][j] = x
        return out

    def column(self, j: int) -> list[Fraction]:
        return [self._data.get((i, j), Fraction(0)) for i in range(self.rows)]

    @property
    def T(self) -> QMatrix:
        return QMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self._data.items()})

    def _check_same_shape(self, other: QMatrix) -> None:
        if self.shape != other.shape:
            raise StructuralError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other)
        data = dict(self._data)
        for k, x in other._data.items():
            data[k] = data.get(k, 0) + x
        return QMatrix(self.rows, self.cols, data)

    def __sub__(self, other: QMatrix) -> QMatrix:
        return self + (-other)

    def __neg__(self) -> QMatrix:
        return QMatrix(self.rows, self.cols, {k: -x for k, x in self._data.items()})

    def scale(self, c) -> QMatrix:
        c = Fraction(c)
        if not c:
            return QMatrix(self.rows, self.cols)
        return QMatrix(self.rows, self.cols, {k: c * x for k, x in self._data.items()})

    def __rmul__(self, c) -> QMatrix:
        return self.scale(c)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise StructuralError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, j), y in other._data.items():
            by_row.setdefault(k, []).append((j, y))
        data: dict[tuple[int, int], Fraction] = {}
        for (i, k), x in self._data.items():
            for j, y in by_row.get(k, ()):
                data[i, j] = data.get((i, j), 0) + x * y
        return QMatrix(self.rows, other.cols, data)

    def apply(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.cols:
            raise StructuralError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = [Fraction(0)] * self.rows
        for (i, j), x in self._data.items():
            if vector[j]:
                out[i] += x * vector[j]
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols}, nnz={len(self._data)})"


def vstack(blocks: Iterable[QMatrix], cols: int) -> QMatrix:
    """Stack matrices with ``cols`` columns on top of each other."""
    data = {}
    offset = 0
    for block in blocks:
        if block.cols != cols:
            raise StructuralError(f"block with {block.cols} columns, expected {cols}")
        for (i, j), x in block.items():
            data[i + offset, j] = x
        offset += block.rows
    return QMatrix(offset, cols, data)


def row_echelon(m: QMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form of ``m``.

    Returns the nonzero reduced rows (sparse, pivot entry 1) and their pivot
    columns in increasing order.
    """
    rows: list[dict[int, Fraction]] = [{} for _ in range(m.rows)]
    for (i, j), x in m.items():
        rows[i][j] = x
    rows = [r for r in rows if r]
    pivots: list[int] = []
    reduced: list[dict[int, Fraction]] = []
    for col in range(m.cols):
        # pick the sparsest row with an entry in this column
        best = None
        for idx, r in enumerate(rows):
            if col in r and (best is None or len(r) < len(rows[best])):
                best = idx
        if best is None:
            continue
        piv = rows.pop(best)
        inv = 1 / piv[col]
        piv = {k: v * inv for k, v in piv.items()}
        for idx, r in enumerate(rows):
            f = r.get(col)
            if f:
                for k, v in piv.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        rows = [r for r in rows if r]
        for r in reduced:
            f = r.get(col)
            if f:
                for k, v in piv.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        reduced.append(piv)
        pivots.append(col)
    return reduced, pivots


def rank(m: QMatrix) -> int:
    return len(row_echelon(m)[1])


def nullspace(m: QMatrix) -> list[list[Fraction]]:
    """Exact basis of ``{x : m x = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the basis is canonical for a given column order.
    """
    reduced, pivots = row_echelon(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, p in zip(reduced, pivots):
            c = r.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def determinant(m: QMatrix) -> Fraction:
    """Determinant by Gaussian elimination with exact pivots."""
    if m.rows != m.cols:
        raise StructuralError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    a = m.to_rows()
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                row, prow = a[r], a[col]
                for k in range(col, n):
                    if prow[k]:
                        row[k] -= f * prow[k]
    return det
