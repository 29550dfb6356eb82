"""Jacobian syzygies, Milnor algebra dimensions and the near-freeness test.

A relation of degree r among the partials is a kernel vector of the
Macaulay matrix of (a, b, c) -> a f_x + b f_y + c f_z restricted to
S_r^3 -> S_{r+m-1}. All ranks and kernels are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import StabilizationFailure, UndefinedInputError
from .exactpoly import HPoly, dim_graded, monomial_index, monomials
from .linalg import RatMatrix, kernel_basis, row_echelon


@dataclass(frozen=True)
class MacaulayMatrix:
    r: int
    m: int
    matrix: RatMatrix

    @property
    def row_monomials(self):
        return monomials(self.r + self.m - 1)

    @property
    def col_monomials(self):
        return monomials(self.r)


@dataclass(frozen=True)
class NearFreeVerdict:
    m: int
    r: int
    tau: int
    nearly_free: bool
    exponents: tuple[int, int] | None

    @property
    def lhs(self) -> int:
        return near_free_lhs(self.m, self.r)


@dataclass
class SyzygyReport:
    m: int
    mdr: int
    witness: tuple[HPoly, HPoly, HPoly]
    kernel_dims: dict = field(default_factory=dict)
    milnor_dims: dict = field(default_factory=dict)
    tau: int | None = None
    notes: list = field(default_factory=list)


def jacobian_generators(f: HPoly) -> tuple[HPoly, HPoly, HPoly]:
    if f.degree < 1:
        raise UndefinedInputError("the Jacobian ideal needs a form of degree >= 1")
    return f.gradient()


def _columns(f: HPoly, r: int) -> list[list[Fraction]]:
    """Columns of the Macaulay matrix: coefficient vectors of mu * f_v."""
    m = f.degree
    idx = monomial_index(r + m - 1)
    nrows = len(idx)
    cols = []
    for g in jacobian_generators(f):
        terms = g.terms
        for mu in monomials(r):
            col = [Fraction(0)] * nrows
            for e, c in terms.items():
                col[idx[(e[0] + mu[0], e[1] + mu[1], e[2] + mu[2])]] = c
            cols.append(col)
    return cols


def macaulay_matrix(f: HPoly, r: int) -> MacaulayMatrix:
    if r < 0:
        raise ValueError("relation degree must be nonnegative")
    cols = _columns(f, r)
    nrows = dim_graded(r + f.degree - 1)
    rows = [[col[i] for col in cols] for i in range(nrows)]
    mat = RatMatrix.from_rows(rows, len(cols)) if rows else RatMatrix.zeros(0, len(cols))
    return MacaulayMatrix(r, f.degree, mat)


def _rank_of_map(f: HPoly, r: int) -> int:
    """Rank of S_r^3 -> S_{r+m-1}, computed on the transpose (same rank)."""
    cols = _columns(f, r)
    _, pivots = row_echelon(cols, dim_graded(r + f.degree - 1))
    return len(pivots)


def vector_to_triple(vec, r: int) -> tuple[HPoly, HPoly, HPoly]:
    n = dim_graded(r)
    return tuple(HPoly.from_vector(r, vec[i * n:(i + 1) * n]) for i in range(3))


def _primitive_triple(triple):
    from math import gcd, lcm

    den = 1
    for p in triple:
        for c in p.terms.values():
            den = lcm(den, c.denominator)
    ints = [c * den for p in triple for c in p.terms.values()]
    g = 0
    for v in ints:
        g = gcd(g, int(v))
    scale = Fraction(den, g or 1)
    return tuple(p * scale for p in triple)


def verify_relation(f: HPoly, triple) -> bool:
    fx, fy, fz = jacobian_generators(f)
    a, b, c = triple
    if a.is_zero() and b.is_zero() and c.is_zero():
        return False
    return (a * fx + b * fy + c * fz).is_zero()


def relations(f: HPoly, r: int) -> list[tuple[HPoly, HPoly, HPoly]]:
    """A basis of the degree-r relations, each audited by polynomial arithmetic."""
    mac = macaulay_matrix(f, r)
    out = []
    for vec in kernel_basis(mac.matrix):
        triple = _primitive_triple(vector_to_triple(vec, r))
        if not verify_relation(f, triple):
            raise AssertionError(f"kernel vector at degree {r} is not a relation")
        out.append(triple)
    return out


def minimal_relation(f: HPoly) -> tuple[int, tuple[HPoly, HPoly, HPoly], dict]:
    """(mdr, witness, kernel dimension per searched degree)."""
    jacobian_generators(f)
    m = f.degree
    dims = {}
    for r in range(0, m):
        rels = relations(f, r)
        dims[r] = len(rels)
        if rels:
            return r, rels[0], dims
    raise AssertionError("no relation up to degree m-1; Koszul relations must exist")


def mdr(f: HPoly) -> int:
    return minimal_relation(f)[0]


def milnor_dim(f: HPoly, k: int) -> int:
    """dim M(f)_k = dim S_k - rank(S_{k-m+1}^3 -> S_k)."""
    if k < 0:
        return 0
    m = f.degree
    if m < 1:
        raise UndefinedInputError("Milnor algebra of a constant")
    r = k - m + 1
    if r < 0:
        return dim_graded(k)
    return dim_graded(k) - _rank_of_map(f, r)


def tjurina_global(f: HPoly, dims: dict | None = None) -> int:
    """Stable value of dim M(f)_k, first searched from k = 3m - 6 up to 5m."""
    m = f.degree
    start = max(3 * m - 6, 0)
    prev = None
    for k in range(start, 5 * m + 1):
        val = milnor_dim(f, k)
        if dims is not None:
            dims[k] = val
        if val == prev:
            return val
        prev = val
    raise StabilizationFailure(
        f"dim M(f)_k did not stabilize for k <= {5 * m}; singularities are not isolated"
    )


def near_free_lhs(m: int, r: int) -> int:
    """r^2 - r(m-1) + (m-1)^2, equal to tau + 1 exactly when the curve is nearly free."""
    return r * r - r * (m - 1) + (m - 1) ** 2


def nearly_free_verdict(m: int, r: int, tau: int) -> NearFreeVerdict:
    ok = near_free_lhs(m, r) == tau + 1
    return NearFreeVerdict(m, r, tau, ok, (r, m - r) if ok else None)


def exponent_identity_holds(d1: int, d2: int) -> bool:
    """r^2 - r(m-1) + (m-1)^2 - 1 equals d1^2 + d2^2 + d1 d2 - d1 - 2 d2 for r = d1, m = d1 + d2."""
    m = d1 + d2
    return near_free_lhs(m, d1) - 1 == d1 * d1 + d2 * d2 + d1 * d2 - d1 - 2 * d2


def resolution_shape(m: int, d1: int, d2: int) -> str:
    """Graded shape of the minimal resolution of M(f) for a nearly free curve."""
    return (
        f"0 -> S(-{d2 + m}) -> S(-{d1 + m - 1}) + S(-{d2 + m - 1})^2 "
        f"-> S(-{m - 1})^3 -> S -> M(f) -> 0"
    )


def syzygy_report(f: HPoly) -> SyzygyReport:
    m = f.degree
    r, witness, kdims = minimal_relation(f)
    milnor = {}
    tau = tjurina_global(f, milnor)
    rep = SyzygyReport(m, r, witness, kdims, milnor, tau)
    if r == 0:
        rep.notes.append("partials are linearly dependent: the curve is a cone")
    if r == m - 1:
        rep.notes.append("minimal relation found in degree m-1, where Koszul relations live")
    return rep


def koszul_relation(f: HPoly) -> tuple[HPoly, HPoly, HPoly]:
    _, fy, fz = jacobian_generators(f)
    return HPoly.zero(f.degree - 1), -fz, fy


def expected_macaulay_shape(m: int, r: int) -> tuple[int, int]:
    return comb(r + m + 1, 2), 3 * comb(r + 2, 2)
