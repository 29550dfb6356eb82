"""Exact rank and kernel computations over the rationals.

Rows are scaled to primitive integer vectors and reduced with one-step
fraction-free (Bareiss) elimination, so all intermediate arithmetic is
on integers (gmpy2 when available). Back-substitution for kernels reintroduces
``Fraction`` only on the r pivot rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

__all__ = [
    "RatMatrix",
    "rank_exact",
    "kernel_basis",
    "determinant",
    "row_echelon",
]


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            entries.extend(Fraction(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        cols = [
            [self.entries[i * self.cols + j] for i in range(self.rows)]
            for j in range(self.cols)
        ]
        return RatMatrix.from_rows(cols, self.rows)

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)))
        return out


def _integer_rows(rows) -> list[list[int]]:
    """Scale each row to a primitive integer vector (row space unchanged)."""
    out = []
    for r in rows:
        den = 1
        for x in r:
            x = Fraction(x)
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        ints = [_mpz(int(Fraction(x) * den)) for x in r]
        g = 0
        for x in ints:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            ints = [x // g for x in ints]
        if any(ints):
            out.append(ints)
    return out


def row_echelon(rows, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free echelon form of an integer-scaled copy of ``rows``.

    Returns the nonzero echelon rows and their pivot columns. The pivot
    in each column is the first remaining row (in input order) with a
    nonzero entry there.
    """
    a = _integer_rows(rows)
    pivots: list[int] = []
    echelon: list[list[int]] = []
    prev = 1
    col = 0
    while a and col < ncols:
        idx = next((i for i, r in enumerate(a) if r[col]), None)
        if idx is None:
            col += 1
            continue
        prow = a.pop(idx)
        p = prow[col]
        tail = prow[col + 1:]
        nxt = []
        for r in a:
            c = r[col]
            if c:
                nr = [(p * x - c * y) // prev for x, y in zip(r[col + 1:], tail)]
            else:
                nr = [(p * x) // prev for x in r[col + 1:]]
            # keep full-width rows so column indices stay aligned
            nxt.append([0] * (col + 1) + nr)
        echelon.append(prow)
        pivots.append(col)
        prev = p
        a = [r for r in nxt if any(r)]
        col += 1
    return echelon, pivots


def rank_exact(m: RatMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = row_echelon([m.row(i) for i in range(m.rows)], m.cols)
    return len(pivots)


def _rref(echelon: list[list[int]], pivots: list[int]) -> list[list[Fraction]]:
    rows = []
    for r, pc in zip(echelon, pivots):
        p = int(r[pc])
        rows.append([Fraction(int(x), p) for x in r])
    for i in range(len(rows) - 1, -1, -1):
        pc = pivots[i]
        for j in range(i):
            c = rows[j][pc]
            if c:
                rj, ri = rows[j], rows[i]
                rows[j] = [x - c * y for x, y in zip(rj, ri)]
    return rows


def kernel_basis(m: RatMatrix, verify: bool = True) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per non-pivot column.

    Each vector is checked by exact re-multiplication and the count is
    checked against rank-nullity before returning.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = [[Fraction(int(i == j)) for i in range(m.cols)] for j in range(m.cols)]
        return basis
    echelon, pivots = row_echelon([m.row(i) for i in range(m.rows)], m.cols)
    rref = _rref(echelon, pivots)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[free]
        basis.append(v)
    rank = len(pivots)
    if rank + len(basis) != m.cols:
        raise AssertionError("rank-nullity violated")
    if verify:
        for v in basis:
            if any(m.apply(v)):
                raise AssertionError("kernel vector does not annihilate the matrix")
    return basis


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix of rationals (Bareiss)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    den = 1
    a = []
    for r in rows:
        r = [Fraction(x) for x in r]
        d = 1
        for x in r:
            d = lcm(d, x.denominator)
        den *= d
        a.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return Fraction(sign * a[n - 1][n - 1], den)
