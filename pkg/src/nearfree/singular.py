"""Singular points of conic-line arrangements and their weak combinatorics.

Every pair of components is intersected exactly. Intersection points are
first computed as Galois orbits (coordinates in a number field Q[t]/(p))
with their local intersection multiplicity, then expanded into individual
complex points whose normalized coordinates are :class:`AlgNum` values.
Points coming from different pairs are merged with exact algebraic-number
equality, and every merged point is classified as a node, a tacnode or an
ordinary triple point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .arrangement import Arrangement, ConicSpec, LineSpec, validate
from .errors import NumericalDegeneracy, RepeatedComponent, UnsupportedSingularity
from .exactpoly import (
    AlgNum,
    NumberField,
    UPoly,
    factor_rational,
    format_rational,
    kpoly_gcd,
    squarefree_decomposition,
)
from .linalg import determinant

SHEAR_RETRIES = 8
SHEAR_RANGE = 9

NODE = "node"
TACNODE = "tacnode"
TRIPLE = "triple"


# -- data ------------------------------------------------------------------------

@dataclass(frozen=True)
class PointOrbit:
    """A Galois orbit of projective points: coordinates in ``field``, normalized."""

    field: NumberField
    coords: tuple

    @property
    def size(self) -> int:
        return self.field.degree

    def points(self) -> list[tuple[AlgNum, AlgNum, AlgNum]]:
        if self.field.degree == 1:
            return [tuple(AlgNum.rational(c.rational_value()) for c in self.coords)]
        return [
            tuple(self.field.embed(c, root) for c in self.coords)
            for root in self.field.roots()
        ]


@dataclass(frozen=True)
class IntersectionRecord:
    pair: tuple[int, int]
    point: tuple[AlgNum, AlgNum, AlgNum]
    multiplicity: int
    orbit: PointOrbit | None = field(default=None, compare=False, repr=False)


@dataclass
class SingPoint:
    point: tuple[AlgNum, AlgNum, AlgNum]
    branches: tuple[int, ...]
    multiplicities: dict
    kind: str

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.point)

    def affine_approx(self) -> tuple[float, float] | None:
        """Real affine (x/z, y/z) for real points off the line z = 0, else None."""
        if not self.is_real():
            return None
        z = self.point[2]
        if z.is_rational() and z.rational_value() == 0:
            return None
        x, y, zz = (c.approx(12).real for c in self.point)
        return x / zz, y / zz


@dataclass(frozen=True)
class WeakCombinatorics:
    d: int
    k: int
    n2: int
    t: int
    n3: int

    @property
    def m(self) -> int:
        return 2 * self.k + self.d

    @property
    def tau(self) -> int:
        return tjurina_from_wc(self)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.d, self.k, self.n2, self.t, self.n3)


def check_count(wc: WeakCombinatorics) -> bool:
    """binom(m, 2) - k == n2 + 2t + 3n3."""
    return comb(wc.m, 2) - wc.k == wc.n2 + 2 * wc.t + 3 * wc.n3


def tjurina_from_wc(wc: WeakCombinatorics) -> int:
    return wc.n2 + 3 * wc.t + 4 * wc.n3


def nodal_node_count(d: int, k: int) -> int:
    """Number of nodes of an arrangement with only transversal double points."""
    return 4 * comb(k, 2) + 2 * k * d + comb(d, 2)


# -- helpers -----------------------------------------------------------------------

def _normalize(coords):
    """Scale so that the first nonzero coordinate (x, y, z order) equals 1."""
    lead = next(c for c in coords if c)
    inv = 1 / lead
    return tuple(c * inv for c in coords)


def _rational_orbit(coords) -> PointOrbit:
    K = NumberField(UPoly([0, 1]))
    return PointOrbit(K, _normalize(tuple(K(Fraction(c)) for c in coords)))


def _line_basis(line: LineSpec):
    a, b, c = line.coefficients
    if a:
        return (-b, a, Fraction(0)), (-c, Fraction(0), a)
    if b:
        return (Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), -c, b)
    return (Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))


def _bilinear(M, u, v):
    return sum(M[i][j] * u[i] * v[j] for i in range(3) for j in range(3))


def _records(pair, orbit: PointOrbit, mult: int) -> list[IntersectionRecord]:
    return [IntersectionRecord(pair, pt, mult, orbit) for pt in orbit.points()]


# -- pairwise intersections ------------------------------------------------------------

def line_line_orbits(l1: LineSpec, l2: LineSpec) -> list[tuple[PointOrbit, int]]:
    a1, b1, c1 = l1.coefficients
    a2, b2, c2 = l2.coefficients
    p = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if not any(p):
        raise RepeatedComponent("proportional lines have no isolated intersection")
    return [(_rational_orbit(p), 1)]


def line_conic_orbits(line: LineSpec, conic: ConicSpec) -> list[tuple[PointOrbit, int]]:
    M = conic.matrix()
    u, v = _line_basis(line)
    w = tuple(x + y for x, y in zip(u, v))
    # pick a direction point off the conic so q below has degree exactly 2
    for p0, p1 in ((u, v), (v, u), (u, w)):
        lead = _bilinear(M, p1, p1)
        if lead:
            break
    q = UPoly([_bilinear(M, p0, p0), 2 * _bilinear(M, p0, p1), lead])
    out = []
    for f, mult in squarefree_decomposition(q):
        for irr in factor_rational(f):
            K = NumberField(irr)
            alpha = K.gen()
            coords = tuple(K(a) + alpha * b for a, b in zip(p0, p1))
            out.append((PointOrbit(K, _normalize(coords)), mult))
    return out


def _shear(rng: random.Random | None):
    if rng is None:
        return [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    while True:
        M = [[Fraction(rng.randint(-SHEAR_RANGE, SHEAR_RANGE)) for _ in range(3)] for _ in range(3)]
        if determinant(M):
            return M


def _transform(A, M):
    """M^T A M."""
    AM = [[sum(A[i][k] * M[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return [[sum(M[k][i] * AM[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _coeffs_in_v(B):
    """Q(u, v, 1) = a2 v^2 + a1(u) v + a0(u) for the Gram matrix B."""
    a2 = UPoly([B[1][1]])
    a1 = UPoly([2 * B[1][2], 2 * B[0][1]])
    a0 = UPoly([B[2][2], 2 * B[0][2], B[0][0]])
    return a0, a1, a2


def quadratic_resultant(f, g):
    """Res_v of a2 v^2 + a1 v + a0 and b2 v^2 + b1 v + b0 (coefficients in any ring)."""
    a0, a1, a2 = f
    b0, b1, b2 = g
    return (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)


def _conic_conic_attempt(A1, A2, M):
    B1, B2 = _transform(A1, M), _transform(A2, M)
    if not B1[1][1] or not B2[1][1]:
        return None  # projection centre lies on a conic
    f, g = _coeffs_in_v(B1), _coeffs_in_v(B2)
    R = quadratic_resultant(f, g)
    if R.degree != 4:
        return None  # intersection point on the line at infinity w = 0
    out = []
    for sq, mult in squarefree_decomposition(R):
        for irr in factor_rational(sq):
            K = NumberField(irr)
            alpha = K.gen()
            fy = [c(alpha) if c.degree > 0 else K(c[0]) for c in f]
            gy = [c(alpha) if c.degree > 0 else K(c[0]) for c in g]
            common = kpoly_gcd(fy, gy)
            if len(common) != 2:
                return None  # two intersection points share a fibre
            v0 = -common[0]
            sheared = (alpha, v0, K(1))
            coords = tuple(
                sum((M[i][j] * sheared[j] for j in range(3)), K(0)) for i in range(3)
            )
            out.append((PointOrbit(K, _normalize(coords)), mult))
    if sum(o.size * mu for o, mu in out) != 4:
        return None
    return out


def conic_conic_orbits(c1: ConicSpec, c2: ConicSpec, seed: int = 0) -> list[tuple[PointOrbit, int]]:
    A1, A2 = c1.matrix(), c2.matrix()
    rng = random.Random(seed)
    for attempt in range(SHEAR_RETRIES + 1):
        M = _shear(None if attempt == 0 else rng)
        res = _conic_conic_attempt(A1, A2, M)
        if res is not None:
            return res
    raise NumericalDegeneracy(
        f"no admissible projection found after {SHEAR_RETRIES} shears"
    )


def line_line_meet(l1: LineSpec, l2: LineSpec, pair=(0, 1)) -> IntersectionRecord:
    (orbit, mult), = line_line_orbits(l1, l2)
    return _records(pair, orbit, mult)[0]


def line_conic_meet(line: LineSpec, conic: ConicSpec, pair=(0, 1)) -> list[IntersectionRecord]:
    out = []
    for orbit, mult in line_conic_orbits(line, conic):
        out.extend(_records(pair, orbit, mult))
    return out


def conic_conic_meet(c1: ConicSpec, c2: ConicSpec, pair=(0, 1), seed: int = 0) -> list[IntersectionRecord]:
    out = []
    for orbit, mult in conic_conic_orbits(c1, c2, seed):
        out.extend(_records(pair, orbit, mult))
    return out


def pair_records(arr: Arrangement) -> dict[tuple[int, int], list[IntersectionRecord]]:
    """Intersection records of every component pair, Bezout-audited."""
    comps = arr.components
    out = {}
    for i, j in combinations(range(len(comps)), 2):
        a, b = comps[i], comps[j]
        if a.degree == 1 and b.degree == 1:
            recs = [line_line_meet(a, b, (i, j))]
        elif a.degree == 1:
            recs = line_conic_meet(a, b, (i, j))
        else:
            recs = conic_conic_meet(a, b, (i, j), seed=i * len(comps) + j)
        total = sum(r.multiplicity for r in recs)
        if total != a.degree * b.degree:
            raise AssertionError(
                f"Bezout audit failed for {arr.component_label(i)}, {arr.component_label(j)}: "
                f"{total} != {a.degree * b.degree}"
            )
        out[(i, j)] = recs
    return out


# -- grouping and classification ----------------------------------------------------------

def _same_point(p, q) -> bool:
    return all(a == b for a, b in zip(p, q))


def format_point(point) -> str:
    parts = []
    for c in point:
        if c.is_rational():
            parts.append(format_rational(c.rational_value()))
        else:
            z = c.approx(12)
            parts.append(f"{z.real:.6g}{z.imag:+.6g}i")
    return "(" + " : ".join(parts) + ")"


def _classify(arr: Arrangement, point, recs) -> SingPoint:
    branches = tuple(sorted({i for r in recs for i in r.pair}))
    mults = {r.pair: r.multiplicity for r in recs}
    labels = ", ".join(arr.component_label(i) for i in branches)
    where = format_point(point)
    if len(branches) == 2:
        mu = recs[0].multiplicity
        if mu == 1:
            return SingPoint(point, branches, mults, NODE)
        if mu == 2:
            return SingPoint(point, branches, mults, TACNODE)
        raise UnsupportedSingularity(
            f"contact order {mu} between {labels} at {where}: A{2 * mu - 1} singularity",
            branches, f"A{2 * mu - 1}",
        )
    if len(branches) == 3:
        if len(recs) != 3:
            raise AssertionError(f"incomplete pair data at {where}")
        if any(r.multiplicity != 1 for r in recs):
            raise UnsupportedSingularity(
                f"tangency inside the triple point of {labels} at {where}",
                branches, "non-ordinary triple point",
            )
        return SingPoint(point, branches, mults, TRIPLE)
    raise UnsupportedSingularity(
        f"{len(branches)} branches ({labels}) pass through {where}",
        branches, f"ordinary {len(branches)}-fold point or worse",
    )


def group_points(records) -> list[tuple[tuple, list[IntersectionRecord]]]:
    groups: list[tuple[tuple, list]] = []
    for rec in records:
        for pt, members in groups:
            if _same_point(pt, rec.point):
                members.append(rec)
                break
        else:
            groups.append((rec.point, [rec]))
    return groups


def group_and_classify(arr: Arrangement) -> tuple[list[SingPoint], WeakCombinatorics]:
    validate(arr).raise_first()
    by_pair = pair_records(arr)
    records = [r for recs in by_pair.values() for r in recs]
    points = [_classify(arr, pt, members) for pt, members in group_points(records)]
    counts = {NODE: 0, TACNODE: 0, TRIPLE: 0}
    for p in points:
        counts[p.kind] += 1
    wc = WeakCombinatorics(arr.d, arr.k, counts[NODE], counts[TACNODE], counts[TRIPLE])
    if not check_count(wc):
        raise AssertionError(f"combinatorial count fails for {wc}")
    return points, wc
