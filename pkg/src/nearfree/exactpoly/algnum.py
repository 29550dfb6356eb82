"""Algebraic numbers of small degree and arithmetic in simple extensions of Q.

An :class:`AlgNum` is a monic irreducible rational polynomial together with
a box that isolates one of its complex roots. A :class:`NumberField`
``Q[t]/(p)`` represents a whole Galois orbit at once: an element stands
for its value at every root of ``p`` simultaneously, so exact zero tests
in the field are valid for all conjugates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import RefinementError, UndefinedInputError
from ..linalg import RatMatrix, kernel_basis
from .roots import CBox, eval_box, isolate_roots
from .upoly import UPoly

MAX_REFINEMENTS = 24


@dataclass(frozen=True, eq=False)
class AlgNum:
    minpoly: UPoly
    box: CBox

    def __post_init__(self):
        if self.minpoly.degree < 1 or self.minpoly.lc != 1:
            raise UndefinedInputError("minimal polynomial must be monic of positive degree")
        if self.minpoly.degree > 4:
            raise UndefinedInputError("algebraic numbers are limited to degree 4")

    @classmethod
    def rational(cls, c) -> "AlgNum":
        c = Fraction(c)
        return cls(UPoly([-c, 1]), CBox.point(c))

    @classmethod
    def roots_of(cls, p: UPoly) -> list["AlgNum"]:
        """All roots of an irreducible polynomial."""
        q = p.monic()
        return [cls(q, b) for b in isolate_roots(q)]

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return -self.minpoly.coeffs[0]

    def refine(self, max_half) -> "AlgNum":
        """Same number, with a box of half-width at most ``max_half``."""
        if self.is_rational():
            return self
        max_half = Fraction(max_half)
        for _ in range(MAX_REFINEMENTS):
            hits = [b for b in isolate_roots(self.minpoly, max_half) if b.intersects(self.box)]
            if len(hits) == 1:
                return AlgNum(self.minpoly, hits[0])
            max_half /= 4
        raise RefinementError(f"could not refine {self}")

    def is_real(self) -> bool:
        if self.is_rational():
            return True
        half = Fraction(1, 16)
        for _ in range(MAX_REFINEMENTS):
            roots = isolate_roots(self.minpoly, half)
            mine = [b for b in roots if b.intersects(self.box)]
            if len(mine) == 1:
                mirror = mine[0].conjugate()
                if not mirror.intersects(mine[0]):
                    return False
                if all(not mirror.intersects(b) for b in roots if b is not mine[0]):
                    return True
            half /= 16
        raise RefinementError(f"could not decide reality of {self}")

    def approx(self, digits: int = 30) -> complex:
        return self.refine(Fraction(1, 10 ** digits)).box.approx()

    def __eq__(self, other):
        if not isinstance(other, AlgNum):
            return NotImplemented
        return algnum_eq(self, other)

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.is_rational():
            return f"AlgNum({self.rational_value()})"
        z = self.box.approx()
        return f"AlgNum(root of {self.minpoly} near {z.real:.6g}{z.imag:+.6g}i)"


def algnum_eq(a: AlgNum, b: AlgNum) -> bool:
    """Decide equality exactly: same minimal polynomial and same isolated root."""
    if a.minpoly != b.minpoly:
        return False
    if a.is_rational():
        return True
    if not a.box.intersects(b.box):
        return False
    half = min(a.box.width, b.box.width, Fraction(1)) / 4 or Fraction(1, 64)
    for _ in range(MAX_REFINEMENTS):
        roots = isolate_roots(a.minpoly, half)
        ia = [i for i, r in enumerate(roots) if r.intersects(a.box)]
        ib = [i for i, r in enumerate(roots) if r.intersects(b.box)]
        if len(ia) == 1 and len(ib) == 1:
            return ia == ib
        half /= 16
    raise RefinementError("algebraic number comparison did not separate roots")


def _xgcd(a: UPoly, b: UPoly):
    """Return (g, s) with s*a = g (mod b)."""
    r0, r1 = a, b
    s0, s1 = UPoly([1]), UPoly()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    return r0, s0


class NumberField:
    """The field Q[t]/(p) for a monic irreducible ``p``."""

    def __init__(self, minpoly: UPoly):
        p = minpoly.monic()
        if p.degree < 1:
            raise UndefinedInputError("defining polynomial must have positive degree")
        self.minpoly = p
        self._roots = None

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField({self.minpoly})"

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, UPoly):
            return FieldElem(self, value % self.minpoly)
        return FieldElem(self, UPoly([value]))

    def gen(self) -> "FieldElem":
        return self(UPoly.t())

    def roots(self) -> list[AlgNum]:
        """The embeddings of the generator, one AlgNum per complex root."""
        if self._roots is None:
            self._roots = AlgNum.roots_of(self.minpoly)
        return list(self._roots)

    def element_minpoly(self, a: "FieldElem") -> UPoly:
        """Minimal polynomial of ``a`` over Q, from the first linear dependence among its powers."""
        n = self.degree
        powers = [self(1)]
        while True:
            powers.append(powers[-1] * a)
            cols = [[p.residue[i] for p in powers] for i in range(n)]
            ker = kernel_basis(RatMatrix.from_rows(cols, len(powers)))
            if ker:
                return UPoly(ker[0]).monic()

    def embed(self, a: "FieldElem", root: AlgNum) -> AlgNum:
        """The value of ``a`` at the embedding sending the generator to ``root``."""
        if a.is_rational():
            return AlgNum.rational(a.rational_value())
        q = self.element_minpoly(a)
        if q.degree == 1:
            return AlgNum.rational(-q.coeffs[0])
        half = Fraction(1, 1 << 10)
        for _ in range(MAX_REFINEMENTS):
            r = root.refine(half)
            image = eval_box(a.residue, r.box)
            hits = [b for b in isolate_roots(q, half) if b.intersects(image)]
            if len(hits) == 1:
                return AlgNum(q, hits[0])
            half /= 64
        raise RefinementError("could not isolate the image of a field element")


class FieldElem:
    __slots__ = ("field", "residue")

    def __init__(self, field: NumberField, residue: UPoly):
        self.field = field
        self.residue = residue

    def _lift(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, UPoly([other]))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.residue + o.residue)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, -self.residue)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.residue - o.residue)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, (self.residue * o.residue) % self.field.minpoly)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = FieldElem(self.field, UPoly([1]))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "FieldElem":
        if not self.residue:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s = _xgcd(self.residue, self.field.minpoly)
        if g.degree != 0:
            raise UndefinedInputError("defining polynomial is reducible")
        return FieldElem(self.field, (s * (1 / g.coeffs[0])) % self.field.minpoly)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_zero(self) -> bool:
        return not self.residue

    def __bool__(self):
        return bool(self.residue)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self):
        return hash(self.residue)

    def is_rational(self) -> bool:
        return self.residue.degree <= 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.residue[0]

    def __repr__(self):
        return f"[{self.residue} mod {self.field.minpoly}]"


# -- polynomials in one variable over a number field, lowest degree first ------

def kpoly_trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def kpoly_divmod(a: list, b: list):
    a, b = kpoly_trim(a), kpoly_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a)
    db = len(b) - 1
    inv = b[-1].inverse() if isinstance(b[-1], FieldElem) else 1 / Fraction(b[-1])
    quot = [0] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] = rem[k + j] - c * bj
    return kpoly_trim(quot), kpoly_trim(rem[:db])


def kpoly_gcd(a: list, b: list) -> list:
    """Monic gcd of two polynomials with number-field coefficients."""
    a, b = kpoly_trim(a), kpoly_trim(b)
    while b:
        a, b = b, kpoly_divmod(a, b)[1]
    if not a:
        return a
    inv = a[-1].inverse() if isinstance(a[-1], FieldElem) else 1 / Fraction(a[-1])
    return [c * inv for c in a]
