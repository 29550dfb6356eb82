"""Certified isolation of the complex roots of squarefree rational polynomials.

Approximations come from Weierstrass (Durand-Kerner) iteration carried out
in exact Gaussian-rational arithmetic, rounded to a dyadic grid after each
step. Floating point is used only to produce starting values. Every
returned box is certified: around an approximation z, the closed disc of
radius n*|p(z)/p'(z)| contains a root, and pairwise disjoint squares
containing those discs hold exactly one root each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import RefinementError, UndefinedInputError
from .upoly import UPoly, is_squarefree

MAX_ROUNDS = 40
MAX_BITS = 1 << 15


@dataclass(frozen=True)
class CBox:
    """Closed complex rectangle [re_lo, re_hi] x [im_lo, im_hi]."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    @classmethod
    def point(cls, re, im=0) -> "CBox":
        re, im = Fraction(re), Fraction(im)
        return cls(re, re, im, im)

    @classmethod
    def square(cls, re, im, half) -> "CBox":
        return cls(re - half, re + half, im - half, im + half)

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        return (self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def intersects(self, other: "CBox") -> bool:
        return not (
            self.re_hi < other.re_lo or other.re_hi < self.re_lo
            or self.im_hi < other.im_lo or other.im_hi < self.im_lo
        )

    def contains(self, re, im=0) -> bool:
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def conjugate(self) -> "CBox":
        return CBox(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    def meets_real_axis(self) -> bool:
        return self.im_lo <= 0 <= self.im_hi

    def __add__(self, other):
        other = _as_box(other)
        return CBox(self.re_lo + other.re_lo, self.re_hi + other.re_hi,
                    self.im_lo + other.im_lo, self.im_hi + other.im_hi)

    __radd__ = __add__

    def __neg__(self):
        return CBox(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    def __sub__(self, other):
        return self + (-_as_box(other))

    def __mul__(self, other):
        other = _as_box(other)
        rr = _imul(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        ii = _imul(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        ri = _imul(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        ir = _imul(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        return CBox(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    __rmul__ = __mul__

    def approx(self) -> complex:
        re, im = self.center
        return complex(float(re), float(im))


def _as_box(v) -> CBox:
    if isinstance(v, CBox):
        return v
    return CBox.point(Fraction(v))


def _imul(a, b, c, d):
    prods = (a * c, a * d, b * c, b * d)
    return min(prods), max(prods)


def eval_box(p: UPoly, box: CBox) -> CBox:
    """Interval Horner evaluation; the result contains p(z) for every z in box."""
    acc = CBox.point(0)
    for c in reversed(p.coeffs):
        acc = acc * box + c
    return acc


# -- Gaussian rationals as (re, im) pairs ------------------------------------

def _cmul(a, b):
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _cdiv(a, b):
    den = b[0] * b[0] + b[1] * b[1]
    return (a[0] * b[0] + a[1] * b[1]) / den, (a[1] * b[0] - a[0] * b[1]) / den


def _ceval(coeffs, z):
    re, im = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        re, im = re * z[0] - im * z[1] + c, re * z[1] + im * z[0]
    return re, im


def _round(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(round(x * scale), scale)


def _seeds(p: UPoly) -> list[tuple[Fraction, Fraction]]:
    n = p.degree
    try:
        approx = np.roots([float(c) for c in reversed(p.coeffs)])
        if len(approx) != n or not np.all(np.isfinite(approx)):
            raise ValueError
        seeds = [(Fraction(float(r.real)), Fraction(float(r.imag))) for r in approx]
    except (OverflowError, ValueError, np.linalg.LinAlgError):
        bound = 1 + max(abs(c) for c in p.coeffs[:-1])
        seeds = []
        for k in range(n):
            ang = 2 * math.pi * (k + 0.25) / n
            seeds.append((Fraction(math.cos(ang)) * bound, Fraction(math.sin(ang)) * bound))
    out = []
    for k, s in enumerate(seeds):
        while s in out:
            s = (s[0] + Fraction(1, 1 << (20 + k)), s[1] + Fraction(1, 1 << (21 + k)))
        out.append(s)
    return out


def _weierstrass_step(coeffs, z, bits):
    out = list(z)
    n = len(z)
    for i in range(n):
        den = (Fraction(1), Fraction(0))
        for j in range(n):
            if j != i:
                den = _cmul(den, (out[i][0] - out[j][0], out[i][1] - out[j][1]))
        if den == (0, 0):
            out[i] = (out[i][0] + Fraction(1, 1 << bits), out[i][1] + Fraction(1, 1 << (bits + 1)))
            continue
        corr = _cdiv(_ceval(coeffs, out[i]), den)
        out[i] = (_round(out[i][0] - corr[0], bits), _round(out[i][1] - corr[1], bits))
    return out


def _certify(p: UPoly, dp: UPoly, z):
    n = p.degree
    boxes = []
    for zi in z:
        pv = _ceval(p.coeffs, zi)
        if pv == (0, 0):
            h = Fraction(0)
        else:
            dv = _ceval(dp.coeffs, zi)
            if dv == (0, 0):
                return None
            w = _cdiv(pv, dv)
            h = n * (abs(w[0]) + abs(w[1]))
        boxes.append(CBox.square(zi[0], zi[1], h))
    for i in range(n):
        for j in range(i + 1, n):
            if boxes[i].intersects(boxes[j]):
                return None
    return boxes


@lru_cache(maxsize=4096)
def _isolate_cached(coeffs: tuple, max_half: Fraction | None) -> tuple[CBox, ...]:
    p = UPoly(coeffs)
    n = p.degree
    if n == 1:
        return (CBox.point(-p.coeffs[0] / p.coeffs[1]),)
    dp = p.derivative()
    z = _seeds(p)
    bits = 64
    if max_half is not None and max_half > 0:
        bits = max(bits, 2 * (max_half.denominator.bit_length() - max_half.numerator.bit_length()) + 16)
    for _ in range(MAX_ROUNDS):
        z = _weierstrass_step(p.coeffs, z, bits)
        boxes = _certify(p, dp, z)
        if boxes is not None and (
            max_half is None or all((b.re_hi - b.re_lo) / 2 <= max_half for b in boxes)
        ):
            boxes.sort(key=lambda b: (b.center[0], b.center[1]))
            return tuple(boxes)
        bits = min(bits * 2, MAX_BITS)
    raise RefinementError(f"root isolation of {p} did not converge")


def isolate_roots(p: UPoly, max_half: Fraction | None = None) -> tuple[CBox, ...]:
    """Pairwise disjoint boxes, each containing exactly one root of ``p``.

    ``p`` must be squarefree. With ``max_half`` every box has half-width at
    most that value.
    """
    if not p:
        raise UndefinedInputError("roots of the zero polynomial")
    if p.degree == 0:
        return ()
    q = p.monic()
    if q.degree > 1 and not is_squarefree(q):
        raise UndefinedInputError(f"{p} is not squarefree")
    mh = None if max_half is None else Fraction(max_half)
    if mh is not None and mh <= 0:
        raise ValueError("max_half must be positive")
    return _isolate_cached(q.coeffs, mh)
