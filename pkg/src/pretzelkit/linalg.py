"""Exact symmetric integer matrices: signature by congruence, determinant."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class SymIntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SymIntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __neg__(self) -> "SymIntMatrix":
        return SymIntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _rows(m) -> list[list[int]]:
    if isinstance(m, SymIntMatrix):
        return m.tolist()
    return [list(row) for row in m]


def inertia(m) -> tuple[int, int, int]:
    """Return (positive, negative, zero) counts of a symmetric matrix.

    Exact congruence diagonalization over Q.  Pivots are taken from the
    diagonal when possible; if the remaining block has zero diagonal but a
    nonzero entry a_ij, the hyperbolic block [[0, a], [a, 0]] is split off,
    contributing one positive and one negative square.  Zero entries are
    skipped, so sparse inputs such as plumbing matrices stay cheap.
    """
    a = [[Fraction(x) for x in row] for row in _rows(m)]
    n = len(a)
    live = list(range(n))
    pos = neg = 0
    while live:
        piv = next((i for i in live if a[i][i] != 0), None)
        if piv is not None:
            live.remove(piv)
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            col = [(i, a[i][piv]) for i in live if a[i][piv] != 0]
            for i, aip in col:
                f = aip / d
                for j, ajp in col:
                    a[i][j] -= f * ajp
            continue
        pair = next(((i, j) for i in live for j in live if i < j and a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        live.remove(i0)
        live.remove(j0)
        pos += 1
        neg += 1
        c = a[i0][j0]
        # Schur complement of [[0, c], [c, 0]]: S = A - (u v^T + v u^T) / c
        u = [(k, a[k][i0]) for k in live if a[k][i0] != 0]
        v = [(k, a[k][j0]) for k in live if a[k][j0] != 0]
        for k, uk in u:
            for l, vl in v:
                a[k][l] -= uk * vl / c
                a[l][k] -= uk * vl / c
    return pos, neg, n - pos - neg


def matrix_signature(m) -> int:
    """Signature (#positive - #negative eigenvalues), exact."""
    pos, neg, _ = inertia(m)
    return pos - neg


def determinant(m) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
