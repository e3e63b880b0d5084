"""Dense bit-packed linear algebra over GF(2).

Rows are Python ints used as bitsets; bit j of a row is the entry in
column j.  This is the hot spot of the package: solves on complexes
with tens of thousands of simplices stay fast because a row operation
is a single big-int XOR.
"""

from __future__ import annotations


class GF2Matrix:
    """Matrix over GF(2) with bit-packed rows."""

    def __init__(self, nrows: int, ncols: int, rows: list[int] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [0] * nrows if rows is None else list(rows)
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    def set(self, i: int, j: int) -> None:
        self.rows[i] |= 1 << j

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_weight(self, i: int) -> int:
        return self.rows[i].bit_count()

    def mul_vector(self, x: int) -> int:
        """Matrix times column vector; both vectors are bitmasks."""
        out = 0
        for i, row in enumerate(self.rows):
            if (row & x).bit_count() & 1:
                out |= 1 << i
        return out

    def rank(self) -> int:
        work = self.rows[:]
        rank = 0
        for col in range(self.ncols):
            mask = 1 << col
            pivot = next((r for r in range(rank, len(work)) if work[r] & mask), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(len(work)):
                if r != rank and work[r] & mask:
                    work[r] ^= work[rank]
            rank += 1
            if rank == len(work):
                break
        return rank

    def solve(self, rhs: int) -> int | None:
        """A solution x of M x = rhs, or None when inconsistent.

        Gauss-Jordan on rows augmented with the right hand side bit;
        free variables are set to zero.
        """
        aug_bit = 1 << self.ncols
        work = [
            row | (aug_bit if (rhs >> i) & 1 else 0) for i, row in enumerate(self.rows)
        ]
        pivot_cols: list[int] = []
        rank = 0
        for col in range(self.ncols):
            mask = 1 << col
            pivot = next((r for r in range(rank, len(work)) if work[r] & mask), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(len(work)):
                if r != rank and work[r] & mask:
                    work[r] ^= work[rank]
            pivot_cols.append(col)
            rank += 1
            if rank == len(work):
                break
        for r in range(rank, len(work)):
            if work[r]:  # only the augmented bit can remain
                return None
        x = 0
        for i, col in enumerate(pivot_cols):
            if work[i] & aug_bit:
                x |= 1 << col
        return x


def bitmask_from_indices(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def indices_from_bitmask(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1
