import json
import random
from fractions import Fraction

import pytest

from conftest import FIXTURES, fixture_arrangement
from nearfree.arrangement import (
    Arrangement,
    ConicSpec,
    LineSpec,
    defining_polynomial,
    load_arrangement,
    parse_arrangement,
    validate,
)
from nearfree.errors import DegenerateConic, EmptyArrangement, RepeatedComponent, UndefinedInputError
from nearfree.exactpoly import HPoly

x, y, z = HPoly.var("x"), HPoly.var("y"), HPoly.var("z")


def test_c3_is_valid():
    arr = fixture_arrangement("c3")
    rep = validate(arr)
    assert rep.ok and not rep.warnings
    assert arr.m == 3


def test_degenerate_conic():
    arr = Arrangement.from_coefficients([[1, 0, 0]], [[1, 1, 2, 2, 0, 0]])
    assert ConicSpec(1, 1, 2, 2, 0, 0).determinant() == 0
    with pytest.raises(DegenerateConic):
        validate(arr).raise_first()


def test_repeated_components():
    with pytest.raises(RepeatedComponent):
        validate(Arrangement.from_coefficients([[1, 2, 3], [2, 4, 6]], [[1, 1, -1, 0, 0, 0]])).raise_first()
    with pytest.raises(RepeatedComponent):
        validate(Arrangement.from_coefficients([[1, 0, 0]], [[1, 1, -1, 0, 0, 0], [-2, -2, 2, 0, 0, 0]])).raise_first()


def test_empty_and_scope_warnings():
    with pytest.raises(EmptyArrangement):
        validate(Arrangement()).raise_first()
    rep = validate(Arrangement.from_coefficients([], [[1, 1, -1, 0, 0, 0]]))
    assert rep.ok and any("d = 0" in w for w in rep.warnings)
    rep = validate(Arrangement.from_coefficients([[1, 0, 0]], []))
    assert rep.ok and any("k = 0" in w for w in rep.warnings)


def test_defining_polynomials():
    f3 = defining_polynomial(fixture_arrangement("c3"))
    assert f3.degree == 3
    assert f3 == (x**2 + y**2 - 16 * z**2) * (y - x + 4 * z)
    f7 = defining_polynomial(fixture_arrangement("c7"))
    assert f7.degree == 7
    assert f7 == (x**2 + y**2 - z**2) * (x**2 - z**2) * (y**2 - z**2) * (y + x)


def test_hand_expansion_disjoint_supports():
    # z * (x^2 + yz)
    arr = Arrangement.from_coefficients([[0, 0, 1]], [[1, 0, 0, 0, 0, 1]])
    f = defining_polynomial(arr)
    assert f.terms == {(2, 0, 1): 1, (0, 1, 2): 1}


def test_degree_and_order_independence(fixture_name):
    lines, conics, *_ = FIXTURES[fixture_name]
    arr = fixture_arrangement(fixture_name)
    f = defining_polynomial(arr)
    assert f.degree == 2 * arr.k + arr.d
    rng = random.Random(7)
    shuffled = Arrangement.from_coefficients(rng.sample(lines, len(lines)), conics)
    assert defining_polynomial(shuffled) == f


def _point_on_line(a, b, c, u, v):
    """A rational point of ax + by + cz = 0 built from free parameters u, v."""
    if a:
        return (-(b * u + c * v) / a, u, v)
    if b:
        return (u, -c * v / b, v)
    return (u, v, Fraction(0))


def test_vanishes_on_rational_points_of_components():
    rng = random.Random(3)
    for name in FIXTURES:
        arr = fixture_arrangement(name)
        f = defining_polynomial(arr)
        for line in arr.lines:
            for _ in range(5):
                u = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                v = Fraction(rng.randint(-9, 9))
                p = _point_on_line(*line.coefficients, u, v)
                assert line.form().evaluate(p) == 0
                assert f.evaluate(p) == 0
        # every fixture conic is x^2 + y^2 = r^2 z^2; use the rational parametrization of the circle
        conic = arr.conics[0]
        r = 4 if conic.C == -16 else 1
        for s in range(-3, 4):
            s = Fraction(s, 2)
            p = (r * (1 - s * s), 2 * r * s, 1 + s * s)
            assert conic.form().evaluate(p) == 0
            assert f.evaluate(p) == 0


def test_parse_round_trip():
    obj = {"lines": [[-1, 1, "1/2"]], "conics": [[1, 1, -16, 0, 0, 0]]}
    arr = parse_arrangement(obj)
    assert arr.lines[0] == LineSpec(-1, 1, Fraction(1, 2))
    assert parse_arrangement(json.loads(json.dumps(arr.to_json_obj()))) == arr


def test_parse_errors(tmp_path):
    with pytest.raises(UndefinedInputError, match=r"lines\[0\]\[0\]"):
        parse_arrangement({"lines": [["1/0", 0, 0]]})
    with pytest.raises(UndefinedInputError, match="unknown keys"):
        parse_arrangement({"lines": [], "curves": []})
    with pytest.raises(UndefinedInputError, match="3 numbers"):
        parse_arrangement({"lines": [[1, 2]]})
    bad = tmp_path / "bad.json"
    bad.write_text('{"lines": [[1, 2, 3]\n  "conics": []}')
    with pytest.raises(UndefinedInputError, match="line 2"):
        load_arrangement(bad)
