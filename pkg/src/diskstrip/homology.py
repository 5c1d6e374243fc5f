"""GF(2) cellular chain complex: boundary matrices and Betti numbers."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError
from .symbols import StripParams, dimension, enumerate_cells, face_counts


class SparseBitMatrix:
    """Column-major GF(2) matrix; each column is an int bitset over rows."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows: int, cols: int, columns: Sequence[int]):
        if len(columns) != cols:
            raise ValueError(f"expected {cols} columns, got {len(columns)}")
        limit = 1 << rows
        for c in columns:
            if c < 0 or c >= limit:
                raise ValueError("column bitset out of row range")
        self.rows = rows
        self.cols = cols
        self.columns = list(columns)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "SparseBitMatrix":
        columns = [0] * cols
        for r, c in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r}, {c}) out of range")
            if columns[c] >> r & 1:
                raise ValueError(f"duplicate entry ({r}, {c})")
            columns[c] |= 1 << r
        return cls(rows, cols, columns)

    @property
    def entries(self) -> set[tuple[int, int]]:
        out = set()
        for c, col in enumerate(self.columns):
            while col:
                low = col & -col
                out.add((low.bit_length() - 1, c))
                col ^= low
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseBitMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.columns) == (other.rows, other.cols, other.columns)

    def __repr__(self) -> str:
        return f"SparseBitMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(c.bit_count() for c in self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def column_entries(self, c: int) -> list[int]:
        col = self.columns[c]
        return [r for r in range(col.bit_length()) if col >> r & 1]

    def __matmul__(self, other: "SparseBitMatrix") -> "SparseBitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        mine = self.columns
        out = []
        for col in other.columns:
            acc = 0
            while col:
                low = col & -col
                acc ^= mine[low.bit_length() - 1]
                col ^= low
            out.append(acc)
        return SparseBitMatrix(self.rows, other.cols, out)

    def permute_columns(self, perm: Sequence[int]) -> "SparseBitMatrix":
        return SparseBitMatrix(self.rows, self.cols, [self.columns[i] for i in perm])

    def rank(self) -> int:
        """Rank by column reduction on the highest set bit.

        Columns are processed in stored order, so the pivot sequence is
        fully determined by the enumeration order.
        """
        pivots: dict[int, int] = {}
        for col in self.columns:
            while col:
                top = col.bit_length() - 1
                p = pivots.get(top)
                if p is None:
                    pivots[top] = col
                    break
                col ^= p
        return len(pivots)

    def dump(self) -> str:
        """Text dump: ``rows cols`` header then sorted ``r c`` lines."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{r} {c}" for r, c in sorted(self.entries)]
        return "\n".join(lines) + "\n"


def boundary_matrix(p: StripParams, dim: int) -> SparseBitMatrix:
    """Boundary from ``dim``-cells to ``(dim-1)``-cells, mod 2.

    Rows and columns follow :func:`enumerate_cells` order.
    """
    top = dimension(p)
    if not 1 <= dim <= top:
        raise DomainError(f"boundary dimension must be in 1..{top}, got {dim}")
    return _boundary(p.n, p.w, dim)


@lru_cache(maxsize=32)
def _boundary(n: int, w: int, dim: int) -> SparseBitMatrix:
    p = StripParams(n, w)
    rows = enumerate_cells(p, dim - 1)
    cols = enumerate_cells(p, dim)
    index = {s: i for i, s in enumerate(rows)}
    columns = []
    for s in cols:
        v = 0
        for f, mult in face_counts(s).items():
            if mult & 1:
                v ^= 1 << index[f]
        columns.append(v)
    return SparseBitMatrix(len(rows), len(cols), columns)


def cell_counts(p: StripParams) -> list[int]:
    return [len(enumerate_cells(p, d)) for d in range(dimension(p) + 1)]


@lru_cache(maxsize=None)
def _betti(n: int, w: int) -> tuple[int, ...]:
    p = StripParams(n, w)
    top = dimension(p)
    counts = cell_counts(p)
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        ranks[d] = boundary_matrix(p, d).rank()
    return tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))


def betti(p: StripParams) -> tuple[int, ...]:
    """GF(2) Betti numbers ``(b_0, ..., b_top)``."""
    return _betti(p.n, p.w)


def euler_characteristic(p: StripParams) -> int:
    return sum((-1) ** d * c for d, c in enumerate(cell_counts(p)))
