"""Factorization over Q of squarefree polynomials of degree at most 4.

Rational roots and monic quadratic factors are searched for with a
certified bound: after scaling ``p`` to a monic integer polynomial P, any
rational root of P is an integer and any monic factor of P has integer
coefficients. Certified root boxes confine those integers to small
intervals, and every candidate is confirmed by exact division.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from ..errors import RefinementError, UndefinedInputError, UnsupportedDegreeError
from .roots import CBox, isolate_roots
from .upoly import UPoly, is_squarefree

MAX_DEGREE = 4


def _monic_integer_scale(p: UPoly) -> tuple[UPoly, int]:
    """Return (P, D) with P(s) = D^n p(s/D) monic with integer coefficients."""
    q = p.monic()
    n = q.degree
    D = 1
    for c in q.coeffs:
        D = math.lcm(D, c.denominator)
    P = UPoly(q.coeffs[i] * D ** (n - i) for i in range(n + 1))
    return P, D


def _integers_in(lo: Fraction, hi: Fraction) -> range:
    return range(math.ceil(lo), math.floor(hi) + 1)


def _real_integer_candidates(box: CBox):
    if not box.meets_real_axis():
        return ()
    return _integers_in(box.re_lo, box.re_hi)


def _unscale(factor: UPoly, D: int) -> UPoly:
    """Map a factor of P(s) back to the variable t = s / D, made monic."""
    n = factor.degree
    return UPoly(factor.coeffs[i] * Fraction(D) ** i for i in range(n + 1)).monic()


def _integer_roots(P: UPoly) -> list[int]:
    half = Fraction(1, 4)
    for _ in range(30):
        boxes = isolate_roots(P, half)
        found = []
        ok = True
        for b in boxes:
            cands = list(_real_integer_candidates(b))
            if len(cands) > 4:
                ok = False
                break
            found.extend(s for s in cands if P(s) == 0)
        if ok:
            return sorted(set(found))
        half /= 16
    raise RefinementError("rational root search did not converge")


def _quadratic_factor(P: UPoly) -> UPoly | None:
    """A monic integer quadratic factor of a monic integer quartic, or None."""
    half = Fraction(1, 8)
    for _ in range(30):
        boxes = isolate_roots(P, half)
        ok = True
        for i, j in combinations(range(4), 2):
            ssum = boxes[i] + boxes[j]
            sprod = boxes[i] * boxes[j]
            a_c = list(_real_integer_candidates(-ssum))
            b_c = list(_real_integer_candidates(sprod))
            if len(a_c) > 4 or len(b_c) > 4:
                ok = False
                break
            for a in a_c:
                for b in b_c:
                    cand = UPoly([b, a, 1])
                    if not (P % cand):
                        return cand
        if ok:
            return None
        half /= 16
    raise RefinementError("quadratic factor search did not converge")


def factor_rational(p: UPoly) -> list[UPoly]:
    """Monic irreducible factors over Q of a squarefree polynomial of degree <= 4."""
    if not p:
        raise UndefinedInputError("cannot factor the zero polynomial")
    if p.degree > MAX_DEGREE:
        raise UnsupportedDegreeError(f"factorization limited to degree {MAX_DEGREE}, got {p.degree}")
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [p.monic()]
    if not is_squarefree(p):
        raise UndefinedInputError(f"{p} is not squarefree")
    P, D = _monic_integer_scale(p)
    factors = []
    for s in _integer_roots(P):
        lin = UPoly([-s, 1])
        P = P // lin
        factors.append(UPoly([Fraction(-s, D), 1]))
    if P.degree == 4:
        quad = _quadratic_factor(P)
        if quad is not None:
            factors.append(_unscale(quad, D))
            factors.append(_unscale(P // quad, D))
            P = UPoly([1])
    if P.degree > 0:
        factors.append(_unscale(P, D))
    factors.sort(key=lambda f: (f.degree, f.coeffs))
    return factors
