"""Exact rational sparse linear algebra.

Everything runs over Q with arbitrary-precision integers: cohomology
dimensions are rank-sensitive and floating-point ranks cannot be trusted.
Rows are scaled to integers and eliminated fraction-free, with content
gcds keeping the entries small.

Pivot selection is lexicographically first nonzero (smallest row, then
smallest column).  That fixes solutions, kernel bases and cohomology
representatives across runs and platforms: solve() zeroes free variables,
nullspace_basis() orders vectors by free column.

The elimination loop lives in a compiled kernel with a pure-Python twin;
set POISSTAB_PURE_PYTHON=1 to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

if os.environ.get("POISSTAB_PURE_PYTHON") == "1":
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _kernel

KERNEL_BACKEND: str = _kernel.BACKEND

ZERO = Fraction(0)


class SparseMatrix:
    """Immutable sparse matrix over Q.

    Entries are stored as {(row, col): Fraction} with no explicit zeros
    and at most one entry per position.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = int(rows)
        self.cols = int(cols)
        data = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for item in items:
            if isinstance(entries, dict):
                (i, j), value = item
            else:
                i, j, value = item
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"entry index ({i}, {j}) out of range for "
                                 f"{self.rows}x{self.cols} matrix")
            value = Fraction(value)
            if value == 0:
                continue
            if (i, j) in data:
                raise ValueError(f"duplicate entry at ({i}, {j})")
            data[(i, j)] = value
        self._data = data

    @classmethod
    def identity(cls, n):
        return cls(n, n, [(i, i, 1) for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def from_dense(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, [(i, j, v) for i, row in enumerate(dense)
                                for j, v in enumerate(row) if v])

    def entry(self, i, j) -> Fraction:
        return self._data.get((i, j), ZERO)

    def entries(self):
        """Canonically ordered (row, col, value) triples."""
        return tuple((i, j, self._data[(i, j)]) for i, j in sorted(self._data))

    @property
    def nnz(self) -> int:
        return len(self._data)

    def is_zero(self) -> bool:
        return not self._data

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows,
                            [(j, i, v) for (i, j), v in self._data.items()])

    def matvec(self, x):
        if len(x) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [ZERO] * self.rows
        for (i, j), v in self._data.items():
            if x[j]:
                out[i] += v * Fraction(x[j])
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        by_row = {}
        for (i, j), v in other._data.items():
            by_row.setdefault(i, []).append((j, v))
        acc = {}
        for (i, k), v in self._data.items():
            for j, w in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), ZERO) + v * w
        return SparseMatrix(self.rows, other.cols,
                            [(i, j, v) for (i, j), v in acc.items() if v])

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def dense_rows(self):
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._data.items():
            out[i][j] = v
        return out

    def _int_rows(self, augment=None):
        """Dense integer rows, each scaled by the lcm of its denominators.

        Row scaling leaves rank, kernel and solution sets unchanged; with
        augment, the extra column is scaled jointly so solve() sees an
        equivalent system.
        """
        if augment is not None and len(augment) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        width = self.cols + (1 if augment is not None else 0)
        rows = [[0] * width for _ in range(self.rows)]
        dens = [[] for _ in range(self.rows)]
        for (i, j), v in self._data.items():
            dens[i].append(v.denominator)
        if augment is not None:
            aug = [Fraction(b) for b in augment]
            for i, b in enumerate(aug):
                if b:
                    dens[i].append(b.denominator)
        for i in range(self.rows):
            scale = lcm(*dens[i]) if dens[i] else 1
            if augment is not None and aug[i]:
                v = aug[i] * scale
                rows[i][self.cols] = v.numerator
        for (i, j), v in self._data.items():
            w = v * lcm(*dens[i])
            rows[i][j] = w.numerator
        return rows


def rank(m: SparseMatrix) -> int:
    """Rank over Q, computed exactly."""
    pivots, _ = _kernel.echelon(m._int_rows(), m.cols)
    return len(pivots)


def solve(m: SparseMatrix, b):
    """One exact solution of m x = b, or None if inconsistent.

    Free variables are set to zero; with the first-nonzero pivot rule this
    makes the returned solution deterministic.
    """
    pivots, ech = _kernel.echelon(m._int_rows(augment=b), m.cols + 1)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        row = ech[k]
        s = Fraction(row[m.cols])
        for j in range(m.cols):
            if j != c and row[j] and x[j]:
                s -= row[j] * x[j]
        x[c] = s / row[c]
    return x


def nullspace_basis(m: SparseMatrix):
    """Exact kernel basis, one vector per free column, ascending.

    Each vector has value 1 at its own free column and 0 at the others.
    """
    pivots, ech = _kernel.echelon(m._int_rows(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = ech[k]
            s = ZERO
            for j in range(m.cols):
                if j != c and row[j] and v[j]:
                    s += row[j] * v[j]
            v[c] = -s / row[c]
        basis.append(v)
    return basis


def row_echelon(m: SparseMatrix):
    """Integer echelon (pivots, rows) of m, for reduction against its row space."""
    return _kernel.echelon(m._int_rows(), m.cols)


def reduce_mod_rows(vec, pivots, ech):
    """Reduce a rational vector modulo the row space of an integer echelon.

    The result is zero at every pivot column, giving a canonical coset
    representative for the given echelon.
    """
    v = [Fraction(x) for x in vec]
    for k, c in enumerate(pivots):
        if v[c]:
            row = ech[k]
            t = v[c] / row[c]
            for j in range(len(v)):
                if row[j]:
                    v[j] -= t * row[j]
    return v


class SpanTracker:
    """Incremental row span with exact membership tests."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = []
        self.ech = []

    def add(self, vec) -> bool:
        """Add a vector to the span; True iff it enlarged the span."""
        fracs = [Fraction(x) for x in vec]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        r = [(f * scale).numerator for f in fracs]
        pivots, ech = _kernel.echelon([r], self.ncols) if not self.pivots else (None, None)
        if pivots is not None:
            if pivots:
                self.pivots.append(pivots[0])
                self.ech.append(ech[0])
                return True
            return False
        reduced = reduce_mod_rows(r, self.pivots, self.ech)
        scale = lcm(*(f.denominator for f in reduced))
        r = [(f * scale).numerator for f in reduced]
        pivots, ech = _kernel.echelon([r], self.ncols)
        if not pivots:
            return False
        self.pivots.append(pivots[0])
        self.ech.append(ech[0])
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)
