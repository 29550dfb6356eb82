"""Conic-line arrangements and their defining polynomials.

Component indices are global: lines come first (0..d-1) in input order,
then conics (d..d+k-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (
    DegenerateConic,
    EmptyArrangement,
    InvalidArrangement,
    RepeatedComponent,
    UndefinedInputError,
)
from .exactpoly import HPoly, format_rational, parse_rational, product
from .linalg import determinant


@dataclass(frozen=True)
class LineSpec:
    """The line a*x + b*y + c*z = 0."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    degree = 1

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def form(self) -> HPoly:
        return HPoly.linear(self.a, self.b, self.c)

    def is_zero(self) -> bool:
        return not any(self.coefficients)


@dataclass(frozen=True)
class ConicSpec:
    """A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction

    def __post_init__(self):
        for name in "ABCDEF":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    degree = 2

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def form(self) -> HPoly:
        return HPoly.quadric(*self.coefficients)

    def matrix(self) -> list[list[Fraction]]:
        """Symmetric Gram matrix M with Q(v) = v^T M v."""
        A, B, C, D, E, F = self.coefficients
        return [[A, D / 2, E / 2], [D / 2, B, F / 2], [E / 2, F / 2, C]]

    def determinant(self) -> Fraction:
        return determinant(self.matrix())

    def is_smooth(self) -> bool:
        return self.determinant() != 0


def _proportional(u, v) -> bool:
    """True when nonzero vectors u and v are scalar multiples."""
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[LineSpec, ...] = ()
    conics: tuple[ConicSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "conics", tuple(self.conics))

    @classmethod
    def from_coefficients(cls, lines=(), conics=()) -> "Arrangement":
        return cls(tuple(LineSpec(*l) for l in lines), tuple(ConicSpec(*c) for c in conics))

    @property
    def d(self) -> int:
        return len(self.lines)

    @property
    def k(self) -> int:
        return len(self.conics)

    @property
    def m(self) -> int:
        return 2 * self.k + self.d

    @property
    def components(self) -> tuple:
        return self.lines + self.conics

    def component_label(self, index: int) -> str:
        if index < self.d:
            return f"L{index + 1}"
        return f"C{index - self.d + 1}"

    def to_json_obj(self) -> dict:
        return {
            "lines": [[_json_num(x) for x in l.coefficients] for l in self.lines],
            "conics": [[_json_num(x) for x in c.coefficients] for c in self.conics],
        }


def _json_num(x: Fraction):
    return x.numerator if x.denominator == 1 else format_rational(x)


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_first(self):
        if self.errors:
            raise self.errors[0]


def validate(arr: Arrangement) -> ValidationReport:
    """Check the standing hypotheses: smooth conics, reduced curve, d >= 1, k >= 1."""
    rep = ValidationReport()
    if not arr.lines and not arr.conics:
        rep.errors.append(EmptyArrangement("arrangement has no components"))
        return rep
    for i, l in enumerate(arr.lines):
        if l.is_zero():
            rep.errors.append(InvalidArrangement(f"{arr.component_label(i)}: all coefficients are zero"))
    for i, c in enumerate(arr.conics):
        if c.determinant() == 0:
            rep.errors.append(DegenerateConic(
                f"{arr.component_label(arr.d + i)}: conic matrix has determinant 0"
            ))
    comps = arr.components
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            a, b = comps[i], comps[j]
            if a.degree != b.degree:
                continue
            if any(a.coefficients) and any(b.coefficients) and _proportional(a.coefficients, b.coefficients):
                rep.errors.append(RepeatedComponent(
                    f"{arr.component_label(i)} and {arr.component_label(j)} define the same curve"
                ))
    if arr.d == 0:
        rep.warnings.append("no lines (d = 0): outside the conic-line scope")
    if arr.k == 0:
        rep.warnings.append("no conics (k = 0): outside the conic-line scope")
    return rep


def defining_polynomial(arr: Arrangement) -> HPoly:
    validate(arr).raise_first()
    return product(c.form() for c in arr.components)


# -- file format -----------------------------------------------------------------

def parse_arrangement(obj) -> Arrangement:
    """Build an arrangement from the decoded JSON document."""
    if not isinstance(obj, dict):
        raise UndefinedInputError("top level must be a JSON object")
    unknown = set(obj) - {"lines", "conics"}
    if unknown:
        raise UndefinedInputError(f"unknown keys: {', '.join(sorted(unknown))}")
    lines = obj.get("lines", [])
    conics = obj.get("conics", [])
    specs = []
    for key, arity, cls in (("lines", 3, LineSpec), ("conics", 6, ConicSpec)):
        entries = lines if key == "lines" else conics
        if not isinstance(entries, list):
            raise UndefinedInputError(f"'{key}' must be a list")
        out = []
        for n, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != arity:
                raise UndefinedInputError(f"{key}[{n}]: expected a list of {arity} numbers")
            vals = []
            for pos, v in enumerate(row):
                try:
                    vals.append(parse_rational(v))
                except UndefinedInputError as exc:
                    raise UndefinedInputError(f"{key}[{n}][{pos}]: {exc}") from None
            out.append(cls(*vals))
        specs.append(tuple(out))
    return Arrangement(specs[0], specs[1])


def load_arrangement(path) -> Arrangement:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UndefinedInputError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from None
    return parse_arrangement(obj)
