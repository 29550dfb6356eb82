"""Dense univariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..errors import UndefinedInputError
from ..linalg import determinant


class UPoly:
    """Immutable univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots) -> "UPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-Fraction(r), 1])
        return out

    @classmethod
    def t(cls) -> "UPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly(c * other for c in self.coeffs)
        if not isinstance(other, UPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other: "UPoly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UPoly(quot), UPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def primitive_integer(self) -> list[int]:
        """Coefficients scaled to coprime integers with positive leading term."""
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g == 0:
            return ints
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            txt = str(mag) if (not mono or mag != 1) else ""
            body = f"{txt}*{mono}" if txt and mono else (txt or mono)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"UPoly({str(self)!r})"


def upoly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def sylvester_matrix(p: UPoly, q: UPoly) -> list[list[Fraction]]:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    hi_p = list(reversed(p.coeffs))
    hi_q = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + hi_p + [Fraction(0)] * (size - i - len(hi_p)))
    for i in range(m):
        rows.append([Fraction(0)] * i + hi_q + [Fraction(0)] * (size - i - len(hi_q)))
    return rows


def upoly_resultant(p: UPoly, q: UPoly) -> Fraction:
    """Determinant of the Sylvester matrix of ``p`` and ``q``."""
    if not p and not q:
        raise UndefinedInputError("resultant of two zero polynomials")
    if not p or not q:
        return Fraction(0)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    return determinant(sylvester_matrix(p, q))


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: monic, pairwise coprime squarefree factors with multiplicities."""
    if not p:
        raise UndefinedInputError("squarefree decomposition of the zero polynomial")
    out = []
    dp = p.derivative()
    a = upoly_gcd(p, dp)
    b = p // a
    c = dp // a
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = upoly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return out


def is_squarefree(p: UPoly) -> bool:
    return bool(p) and upoly_gcd(p, p.derivative()).degree == 0
