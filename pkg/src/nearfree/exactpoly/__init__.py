"""Exact rational, univariate, ternary-form and algebraic-number arithmetic."""

from fractions import Fraction

from ..errors import UndefinedInputError
from .algnum import AlgNum, FieldElem, NumberField, algnum_eq, kpoly_gcd
from .factor import factor_rational
from .hpoly import VARS, HPoly, dim_graded, monomial_index, monomials, poly_partial, product
from .roots import CBox, eval_box, isolate_roots
from .upoly import UPoly, is_squarefree, squarefree_decomposition, upoly_gcd, upoly_resultant

Rational = Fraction


def parse_rational(value) -> Fraction:
    """Parse a JSON integer or a ``"p/q"`` string (q a positive integer)."""
    if isinstance(value, bool):
        raise UndefinedInputError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise UndefinedInputError(f"not a rational number: {value!r}") from None
        if sep and (not den.strip().isdigit() or q <= 0):
            raise UndefinedInputError(f"denominator must be a positive integer: {value!r}")
        return Fraction(p, q)
    raise UndefinedInputError(f"not a rational number: {value!r}")


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


__all__ = [
    "AlgNum", "CBox", "FieldElem", "HPoly", "NumberField", "Rational", "UPoly", "VARS",
    "algnum_eq", "dim_graded", "eval_box", "factor_rational", "format_rational",
    "is_squarefree", "isolate_roots", "kpoly_gcd", "monomial_index", "monomials",
    "parse_rational", "poly_partial", "product", "squarefree_decomposition",
    "upoly_gcd", "upoly_resultant",
]
