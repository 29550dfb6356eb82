from collections import Counter
from fractions import Fraction
from math import comb

import pytest

from conftest import FIXTURES, analysed_random, fixture_arrangement
from nearfree.arrangement import Arrangement, ConicSpec, LineSpec, defining_polynomial
from nearfree.errors import RepeatedComponent, UnsupportedSingularity
from nearfree.exactpoly import UPoly
from nearfree.jacobian import tjurina_global
from nearfree.singular import (
    NODE,
    TACNODE,
    TRIPLE,
    WeakCombinatorics,
    check_count,
    conic_conic_meet,
    group_and_classify,
    line_conic_meet,
    line_line_meet,
    nodal_node_count,
    pair_records,
    tjurina_from_wc,
)

t = UPoly.t()
UNIT = ConicSpec(1, 1, -1, 0, 0, 0)


def rational_point(rec):
    assert all(c.is_rational() for c in rec.point)
    return tuple(c.rational_value() for c in rec.point)


def projective(*coords):
    """Normalize so the first nonzero coordinate is 1, as the records are."""
    coords = [Fraction(c) for c in coords]
    lead = next(c for c in coords if c)
    return tuple(c / lead for c in coords)


def test_line_line_examples():
    rec = line_line_meet(LineSpec(1, 0, 0), LineSpec(0, 1, 0))
    assert rational_point(rec) == projective(0, 0, 1) and rec.multiplicity == 1
    rec = line_line_meet(LineSpec(-1, 1, -4), LineSpec(1, 1, -4))
    assert rational_point(rec) == projective(0, 4, 1)
    rec = line_line_meet(LineSpec(0, 1, -1), LineSpec(0, 1, -2))
    assert rational_point(rec) == projective(1, 0, 0)
    with pytest.raises(RepeatedComponent):
        line_line_meet(LineSpec(1, 2, 3), LineSpec(2, 4, 6))


def test_line_conic_examples():
    recs = line_conic_meet(LineSpec(-1, 1, 4), ConicSpec(1, 1, -16, 0, 0, 0))
    assert sorted(rational_point(r) for r in recs) == sorted([projective(4, 0, 1), projective(0, -4, 1)])
    assert [r.multiplicity for r in recs] == [1, 1]

    recs = line_conic_meet(LineSpec(0, 1, -1), UNIT)
    assert len(recs) == 1 and recs[0].multiplicity == 2
    assert rational_point(recs[0]) == projective(0, 1, 1)

    recs = line_conic_meet(LineSpec(0, 0, 1), UNIT)
    assert len(recs) == 2 and all(r.multiplicity == 1 for r in recs)
    ys = sorted(r.point[1].approx(12).imag for r in recs)
    assert abs(ys[0] + 1) < 1e-9 and abs(ys[1] - 1) < 1e-9
    for r in recs:
        assert r.point[0].rational_value() == 1 and r.point[2].rational_value() == 0
        assert r.point[1].minpoly == t**2 + 1


def test_conic_conic_concentric_circles():
    recs = conic_conic_meet(UNIT, ConicSpec(1, 1, -4, 0, 0, 0))
    assert len(recs) == 2 and all(r.multiplicity == 2 for r in recs)
    for r in recs:
        assert r.point[0].rational_value() == 1 and r.point[2].rational_value() == 0
        assert r.point[1].minpoly == t**2 + 1


def test_conic_conic_tangent_pair():
    recs = conic_conic_meet(UNIT, ConicSpec(2, 1, -1, 0, 0, 0))
    assert sorted(rational_point(r) for r in recs) == sorted([projective(0, 1, 1), projective(0, 1, -1)])
    assert all(r.multiplicity == 2 for r in recs)


def test_conic_conic_generic():
    recs = conic_conic_meet(ConicSpec(1, 2, -3, 1, 0, 0), ConicSpec(3, -1, -1, 0, 1, 2))
    assert len(recs) == 4 and all(r.multiplicity == 1 for r in recs)


def test_bezout_audit_on_fixtures(fixture_name):
    arr = fixture_arrangement(fixture_name)
    comps = arr.components
    for (i, j), recs in pair_records(arr).items():
        assert sum(r.multiplicity for r in recs) == comps[i].degree * comps[j].degree


def test_fixture_weak_combinatorics(fixture_name):
    *_, expected, tau, _ = FIXTURES[fixture_name]
    pts, wc = group_and_classify(fixture_arrangement(fixture_name))
    assert (wc.n2, wc.t, wc.n3) == expected
    assert check_count(wc)
    assert tjurina_from_wc(wc) == tau


def test_c4_prime_kinds():
    pts, _ = group_and_classify(fixture_arrangement("c4_prime"))
    assert Counter(p.kind for p in pts) == {NODE: 3, TACNODE: 1}


def test_check_count_and_tjurina_examples():
    assert check_count(WeakCombinatorics(5, 1, 6, 4, 2))
    assert not check_count(WeakCombinatorics(1, 1, 1, 0, 0))
    assert check_count(WeakCombinatorics(4, 1, 2, 0, 4))
    assert tjurina_from_wc(WeakCombinatorics(1, 1, 2, 0, 0)) == 2
    assert tjurina_from_wc(WeakCombinatorics(3, 1, 3, 0, 2)) == 11
    assert tjurina_from_wc(WeakCombinatorics(1, 1, 0, 0, 0)) == 0


def test_contact_order_three_is_rejected():
    # yz = x^2 and yz = x^2 - xy osculate at (0:0:1); the line x = z keeps the arrangement valid
    arr = Arrangement.from_coefficients([[1, 0, -1]], [[-1, 0, 0, 0, 0, 1], [-1, 0, 0, 1, 0, 1]])
    with pytest.raises(UnsupportedSingularity) as info:
        group_and_classify(arr)
    assert info.value.diagnosis == "A5"
    assert "contact order 3" in str(info.value)


def test_tangency_inside_triple_point_is_rejected():
    # y = z is tangent to the unit circle at (0:1:1), and x = 0 passes through it too
    arr = Arrangement.from_coefficients([[0, 1, -1], [1, 0, 0]], [[1, 1, -1, 0, 0, 0]])
    with pytest.raises(UnsupportedSingularity, match="tangency inside the triple point"):
        group_and_classify(arr)


def test_four_branches_are_rejected():
    arr = Arrangement.from_coefficients([[1, 0, 0], [0, 1, 0], [1, -1, 0], [1, 1, 0]], [[1, 1, -1, 0, 0, 0]])
    with pytest.raises(UnsupportedSingularity, match="4 branches"):
        group_and_classify(arr)


def test_tangent_conics_at_circular_points():
    arr = Arrangement.from_coefficients([[1, 1, 0]], [[1, 1, -1, 0, 0, 0], [1, 1, -4, 0, 0, 0]])
    pts, wc = group_and_classify(arr)
    assert wc.t == 2
    assert all(not p.is_real() for p in pts if p.kind == TACNODE)


def _nonreal_counts_even(pts):
    counts = Counter(p.kind for p in pts if not p.is_real())
    return all(v % 2 == 0 for v in counts.values())


def test_conjugate_points_come_in_pairs(fixture_name):
    pts, _ = group_and_classify(fixture_arrangement(fixture_name))
    assert _nonreal_counts_even(pts)


def test_random_corpus_properties():
    corpus = analysed_random()
    nodal = 0
    for arr, pts, wc in corpus:
        if wc is None:
            continue
        assert check_count(wc)
        assert _nonreal_counts_even(pts)
        for (i, j), recs in pair_records(arr).items():
            assert sum(r.multiplicity for r in recs) == arr.components[i].degree * arr.components[j].degree
        if wc.t == 0 and wc.n3 == 0:
            nodal += 1
            assert wc.n2 == nodal_node_count(arr.d, arr.k) == 4 * comb(arr.k, 2) + 2 * arr.k * arr.d + comb(arr.d, 2)
    assert nodal >= 50


def test_cross_oracle_on_small_random_sample():
    for arr, pts, wc in analysed_random()[:10]:
        if wc is not None:
            assert tjurina_global(defining_polynomial(arr)) == wc.tau
