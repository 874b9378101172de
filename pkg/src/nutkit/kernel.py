"""Exact nullity and nullspace bases for integer matrices.

Everything runs on Python integers; there is no floating-point path.  Rank
comes from Bareiss fraction-free elimination, kernels from its Gauss-Jordan
variant, in which every pivot ends up equal to the same determinant ``D`` so
a free column ``f`` yields the integer kernel vector ``x[f] = D``,
``x[pivot_i] = -E[i][f]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, NonSquare
from .graph import Graph


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch("entries do not match the stated shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntegerMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(r, c, tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_graph(cls, g: Graph) -> IntegerMatrix:
        return cls.from_rows(g.adjacency_matrix())

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[tuple[int, ...], ...]

    @property
    def nullity(self) -> int:
        return len(self.vectors)


def _as_rows(A: IntegerMatrix | Graph) -> list[list[int]]:
    if isinstance(A, Graph):
        return A.adjacency_matrix()
    return A.to_rows()


def _shape(A: IntegerMatrix | Graph) -> tuple[int, int]:
    if isinstance(A, Graph):
        return A.n, A.n
    return A.rows, A.cols


def matvec(A: IntegerMatrix | Graph, v: Sequence[int]) -> list[int]:
    if isinstance(A, Graph):
        if len(v) != A.n:
            raise DimensionMismatch(f"vector length {len(v)} != {A.n}")
        out = []
        for r in A.adj:
            s = 0
            while r:
                low = r & -r
                s += v[low.bit_length() - 1]
                r ^= low
            out.append(s)
        return out
    if len(v) != A.cols:
        raise DimensionMismatch(f"vector length {len(v)} != {A.cols}")
    return [sum(a * x for a, x in zip(row, v)) for row in A.to_rows()]


def rank(A: IntegerMatrix | Graph) -> int:
    """Rank by Bareiss elimination, pivoting on the first nonzero entry."""
    m = _as_rows(A)
    n_rows, n_cols = _shape(A)
    r = 0
    prev = 1
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        piv = prow[c]
        tail = prow[c + 1:]
        for i in range(r + 1, n_rows):
            row = m[i]
            f = row[c]
            if f:
                m[i] = [0] * (c + 1) + [(piv * a - f * b) // prev for a, b in zip(row[c + 1:], tail)]
            elif piv != prev:
                m[i] = [0] * (c + 1) + [piv * a // prev for a in row[c + 1:]]
        prev = piv
        r += 1
        if r == n_rows:
            break
    return r


def nullity(A: IntegerMatrix | Graph) -> int:
    n_rows, n_cols = _shape(A)
    if n_rows != n_cols:
        raise NonSquare(f"nullity needs a square matrix, got {n_rows}x{n_cols}")
    return n_cols - rank(A)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the content and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def _gauss_jordan(m: list[list[int]], n_cols: int) -> tuple[list[int], int]:
    n_rows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        piv = prow[c]
        for i in range(n_rows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(piv * a - f * b) // prev for a, b in zip(row, prow)]
            elif piv != prev:
                m[i] = [piv * a // prev for a in row]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, prev


def kernel_basis(A: IntegerMatrix | Graph) -> KernelBasis:
    """Primitive integer basis of the right nullspace, one vector per free column."""
    n_rows, n_cols = _shape(A)
    if n_rows != n_cols:
        raise NonSquare(f"kernel_basis needs a square matrix, got {n_rows}x{n_cols}")
    m = _as_rows(A)
    pivots, det = _gauss_jordan(m, n_cols)
    pivot_set = set(pivots)
    vectors = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        x = [0] * n_cols
        x[f] = det
        for i, c in enumerate(pivots):
            x[c] = -m[i][f]
        v = primitive(x)
        if any(matvec(A, v)):
            raise ArithmeticError("kernel vector failed exact verification")
        vectors.append(v)
    return KernelBasis(tuple(vectors))
