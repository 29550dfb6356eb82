"""Homogeneous polynomials in x, y, z with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

VARS = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of the given degree in graded-lex order, x > y > z."""
    if degree < 0:
        return ()
    return tuple(
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict[tuple[int, int, int], int]:
    return {mono: n for n, mono in enumerate(monomials(degree))}


def dim_graded(degree: int) -> int:
    """dim S_degree = binom(degree + 2, 2)."""
    return comb(degree + 2, 2) if degree >= 0 else 0


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_mono(e) -> str:
    parts = []
    for v, k in zip(VARS, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


class HPoly:
    """Immutable homogeneous polynomial.

    ``degree`` is the graded piece the polynomial lives in; a zero
    polynomial keeps the degree it was produced at.
    """

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[tuple[int, int, int], object] = ()):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != 3 or sum(e) != degree or min(e) < 0:
                raise ValueError(f"exponent {e} is not of degree {degree}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.degree = degree
        self._terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, degree: int = 0) -> "HPoly":
        return cls(degree)

    @classmethod
    def constant(cls, c) -> "HPoly":
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def linear(cls, a, b, c) -> "HPoly":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def quadric(cls, A, B, C, D, E, F) -> "HPoly":
        """A x^2 + B y^2 + C z^2 + D xy + E xz + F yz."""
        return cls(2, {
            (2, 0, 0): A, (0, 2, 0): B, (0, 0, 2): C,
            (1, 1, 0): D, (1, 0, 1): E, (0, 1, 1): F,
        })

    @classmethod
    def var(cls, name: str) -> "HPoly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls(1, {tuple(e): 1})

    # -- access ---------------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int, int], Fraction]:
        return dict(self._terms)

    def coefficient(self, e) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient_vector(self) -> list[Fraction]:
        """Dense coefficients over ``monomials(self.degree)``."""
        return [self._terms.get(e, Fraction(0)) for e in monomials(self.degree)]

    @classmethod
    def from_vector(cls, degree: int, vec: Iterable) -> "HPoly":
        return cls(degree, zip(monomials(degree), vec))

    # -- arithmetic -----------------------------------------------------------
    def _check_same_degree(self, other: "HPoly"):
        if self.degree != other.degree and self._terms and other._terms:
            raise ValueError(
                f"cannot add homogeneous pieces of degree {self.degree} and {other.degree}"
            )

    def __add__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        self._check_same_degree(other)
        deg = self.degree if self._terms else other.degree
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return HPoly(deg, out)

    def __neg__(self):
        return HPoly(self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HPoly):
            out: dict = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return HPoly(self.degree + other.degree, out)
        if isinstance(other, (int, Fraction)):
            return HPoly(self.degree, {e: c * other for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = HPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._terms.items())))
        return self._hash

    # -- calculus -------------------------------------------------------------
    def partial(self, var) -> "HPoly":
        """Formal partial derivative with respect to ``var`` (name or index)."""
        v = VARS.index(var) if isinstance(var, str) else int(var)
        out = {}
        for e, c in self._terms.items():
            if e[v]:
                ne = list(e)
                ne[v] -= 1
                out[tuple(ne)] = c * e[v]
        return HPoly(max(self.degree - 1, 0), out)

    def gradient(self) -> tuple["HPoly", "HPoly", "HPoly"]:
        return self.partial(0), self.partial(1), self.partial(2)

    def evaluate(self, point):
        """Evaluate at ``point``; works for any ring supporting + * and ** by int."""
        x, y, z = point
        total = 0
        for (i, j, k), c in self._terms.items():
            total = total + c * (x ** i) * (y ** j) * (z ** k)
        return total

    def substitute_linear(self, matrix) -> "HPoly":
        """Return f(M·v): variable ``VARS[i]`` becomes sum_j M[i][j] * VARS[j]."""
        lin = [HPoly(1, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]}) for r in matrix]
        out = HPoly.zero(self.degree)
        for (i, j, k), c in self._terms.items():
            out = out + (lin[0] ** i) * (lin[1] ** j) * (lin[2] ** k) * c
        return out

    def content_normalized(self) -> "HPoly":
        """Scale to primitive integer coefficients with positive leading term."""
        if not self._terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self._terms.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = next(e for e in monomials(self.degree) if e in ints)
        if ints[lead] < 0:
            g = -g
        return HPoly(self.degree, {e: Fraction(v, g) for e, v in ints.items()})

    # -- rendering ------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in monomials(self.degree):
            c = self._terms.get(e)
            if c is None:
                continue
            mono = _fmt_mono(e)
            mag = abs(c)
            if not mono:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_coeff(mag)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"HPoly({self.degree}, {str(self)!r})"


def poly_partial(p: HPoly, var) -> HPoly:
    return p.partial(var)


def product(polys: Iterable[HPoly]) -> HPoly:
    out = HPoly.constant(1)
    for p in polys:
        out = out * p
    return out
