"""Linear algebra over F_2 with rows stored as int bitmasks.

Convention: bit j of a row mask is the entry in column j. A vector in F_2^n is
a single n-bit mask; applying a matrix to it takes parities of row&vector.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

from .bits import parity
from .errors import DimensionMismatchError, SingularMatrixError


def rref_rows(rows: Iterable[int], ncols: int) -> tuple[list[int], int, tuple[int, ...]]:
    """Reduced row echelon form. Returns (rows, rank, pivot_columns).

    Zero rows are kept at the bottom so len(rows) is preserved.
    """
    work = list(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(work)):
            if (work[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> c) & 1:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, r, tuple(pivots)


def rank_of_rows(rows: Iterable[int], ncols: int) -> int:
    return rref_rows(rows, ncols)[1]


def kernel_basis_of_rows(rows: Iterable[int], ncols: int) -> list[int]:
    """Basis of {x : parity(row & x) = 0 for every row}.

    One basis vector per free column, in increasing free-column order; basis
    vector for free column c has bit c set and bits only at pivot columns
    otherwise. This canonical shape is relied on by the subspace code.
    """
    red, rank, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        v = 1 << c
        for i, p in enumerate(pivots):
            if (red[i] >> c) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


class F2Matrix:
    """Immutable bit matrix; rows is a tuple of int masks."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        if ncols < 0:
            raise ValueError("ncols must be >= 0")
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError(f"row mask {r:#x} does not fit in {ncols} columns")
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "F2Matrix":
        ncols = len(entries[0]) if entries else 0
        rows = []
        for e in entries:
            assert len(e) == ncols
            rows.append(sum((bit & 1) << j for j, bit in enumerate(e)))
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, F2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        body = ", ".join(format(r, f"0{max(self.ncols, 1)}b")[::-1] for r in self.rows)
        return f"F2Matrix([{body}], ncols={self.ncols})"

    def apply(self, x: int) -> int:
        """y with bit i = parity(rows[i] & x); the product M x (x a column vector)."""
        y = 0
        for i, row in enumerate(self.rows):
            y |= parity(row & x) << i
        return y

    def transpose(self) -> "F2Matrix":
        cols = []
        for j in range(self.ncols):
            m = 0
            for i, row in enumerate(self.rows):
                m |= ((row >> j) & 1) << i
            cols.append(m)
        return F2Matrix(cols, self.nrows)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError("dimension mismatch in matrix product")
        out = []
        for row in self.rows:
            acc = 0
            j = 0
            while row:
                if row & 1:
                    acc ^= other.rows[j]
                row >>= 1
                j += 1
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def rref(self) -> tuple["F2Matrix", int, tuple[int, ...]]:
        rows, rank, pivots = rref_rows(self.rows, self.ncols)
        return F2Matrix(rows, self.ncols), rank, pivots

    def rank(self) -> int:
        return rank_of_rows(self.rows, self.ncols)

    def kernel_basis(self) -> list[int]:
        return kernel_basis_of_rows(self.rows, self.ncols)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.ncols

    def inverse(self) -> "F2Matrix":
        n = self.ncols
        if self.nrows != n:
            raise SingularMatrixError("matrix is not square")
        # eliminate on [M | I] rows of width 2n
        work = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        r = 0
        for c in range(n):
            sel = next((i for i in range(r, n) if (work[i] >> c) & 1), None)
            if sel is None:
                raise SingularMatrixError("matrix is singular")
            work[r], work[sel] = work[sel], work[r]
            for i in range(n):
                if i != r and (work[i] >> c) & 1:
                    work[i] ^= work[r]
            r += 1
        return F2Matrix([w >> n for w in work], n)

    def solve(self, b: int) -> Optional[int]:
        """One x with parity(rows[i] & x) = bit i of b, or None if inconsistent."""
        aug = [(row, (b >> i) & 1) for i, row in enumerate(self.rows)]
        r = 0
        pivots = []
        for c in range(self.ncols):
            sel = next((i for i in range(r, len(aug)) if (aug[i][0] >> c) & 1), None)
            if sel is None:
                continue
            aug[r], aug[sel] = aug[sel], aug[r]
            for i in range(len(aug)):
                if i != r and (aug[i][0] >> c) & 1:
                    aug[i] = (aug[i][0] ^ aug[r][0], aug[i][1] ^ aug[r][1])
            pivots.append(c)
            r += 1
        for i in range(r, len(aug)):
            if aug[i][1]:
                return None
        x = 0
        for i, c in enumerate(pivots):
            x |= aug[i][1] << c
        return x


def random_invertible(n: int, seed: Optional[int] = None, *, rng: Optional[random.Random] = None) -> F2Matrix:
    """Uniform invertible n x n matrix by rejection sampling of random rows."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if rng is None:
        rng = random.Random(seed)
    while True:
        rows = [rng.getrandbits(n) for _ in range(n)]
        if rank_of_rows(rows, n) == n:
            return F2Matrix(rows, n)
