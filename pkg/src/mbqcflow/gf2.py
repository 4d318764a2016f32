"""Dense linear algebra over GF(2).

Each matrix row is packed into one Python ``int`` (bit ``c`` holds column
``c``), so a row operation is a single XOR regardless of width.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = ["Gf2Matrix", "mat_vec_mul", "row_echelon", "solve_many"]


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("packed row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]] | np.ndarray, cols: int | None = None) -> Gf2Matrix:
        arr = np.asarray(rows, dtype=np.int64)
        if arr.size == 0:
            nrows = arr.shape[0] if arr.ndim >= 1 else 0
            return cls(nrows, cols or 0, (0,) * nrows)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        data = tuple(int("".join("1" if x & 1 else "0" for x in row[::-1]), 2) for row in arr)
        return cls(arr.shape[0], arr.shape[1], data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.data[r] >> c & 1

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, bits in enumerate(self.data):
            for c in range(self.cols):
                out[r, c] = bits >> c & 1
        return out

    def column(self, c: int) -> int:
        """Column ``c`` packed as a bit-vector over rows."""
        v = 0
        for r, bits in enumerate(self.data):
            v |= (bits >> c & 1) << r
        return v


def _pack(x: int | Iterable[int]) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    v = 0
    for i, b in enumerate(x):
        if b & 1:
            v |= 1 << i
    return v


def _eliminate(rows: list[int], ncols: int) -> list[int]:
    """Forward-eliminate ``rows`` in place on columns ``0..ncols-1``; return pivots."""
    pivots: list[int] = []
    rank = 0
    nrows = len(rows)
    for c in range(ncols):
        if rank == nrows:
            break
        bit = 1 << c
        for r in range(rank, nrows):
            if rows[r] & bit:
                break
        else:
            continue
        rows[rank], rows[r] = rows[r], rows[rank]
        pivot = rows[rank]
        for r in range(rank + 1, nrows):
            if rows[r] & bit:
                rows[r] ^= pivot
        pivots.append(c)
        rank += 1
    return pivots


def row_echelon(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Row-echelon form of ``m`` and its pivot columns.

    Forward elimination only (entries above pivots are left alone).
    """
    rows = list(m.data)
    pivots = _eliminate(rows, m.cols)
    return Gf2Matrix(m.rows, m.cols, tuple(rows)), pivots


def solve_many(a: Gf2Matrix, b: Gf2Matrix) -> list[int | None]:
    """Solve ``a @ x = b[:, j]`` for every column ``j`` of ``b``.

    ``[a | b]`` is reduced once; each right-hand side is then answered by
    back substitution with free variables set to zero.  Solutions are
    returned packed (bit ``c`` = component ``c``); ``None`` marks an
    inconsistent system.
    """
    if a.rows != b.rows:
        raise ValueError(f"shape mismatch: A has {a.rows} rows, B has {b.rows}")
    shift = a.cols
    amask = (1 << shift) - 1
    rows = [ra | rb << shift for ra, rb in zip(a.data, b.data)]
    # pivot only on A's columns; B's bits ride along
    pivots = _eliminate(rows, a.cols)
    rank = len(pivots)

    inconsistent = 0
    for r in range(rank, a.rows):
        inconsistent |= rows[r] >> shift

    solutions: list[int | None] = []
    for j in range(b.cols):
        if inconsistent >> j & 1:
            solutions.append(None)
            continue
        x = 0
        for r in range(rank - 1, -1, -1):
            row = rows[r]
            rhs = row >> (shift + j) & 1
            if (rhs ^ (row & amask & x).bit_count()) & 1:
                x |= 1 << pivots[r]
        solutions.append(x)
    return solutions


def mat_vec_mul(a: Gf2Matrix, x: int | Iterable[int]) -> int:
    """Product ``a @ x`` over GF(2), packed over rows.

    ``x`` may be a packed ``int`` or a sequence of bits; for a sequence its
    length must equal ``a.cols``.
    """
    if not isinstance(x, (int, np.integer)):
        x = list(x)
        if len(x) != a.cols:
            raise ValueError(f"shape mismatch: vector of length {len(x)} for {a.cols} columns")
    xv = _pack(x)
    if xv >> a.cols:
        raise ValueError("vector has bits beyond the column count")
    y = 0
    for r, row in enumerate(a.data):
        y |= ((row & xv).bit_count() & 1) << r
    return y
