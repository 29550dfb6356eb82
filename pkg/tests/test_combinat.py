from fractions import Fraction
from math import comb

import pytest

from conftest import FIXTURES
from nearfree.combinat import (
    OPEN_DEGREES,
    Candidate,
    _nearly_free_branch,
    count_admissible,
    count_holds,
    degree_infeasibility_witness,
    degree_upper_bound,
    existence_status,
    exponent_range,
    hirzebruch_holds,
    hirzebruch_margin,
    mdr_lower_bound,
    nearly_free_candidates,
    nonexistence_certificate,
    tacnode_triple_sum_doubled,
    tau_from_exponents,
    verify_certificate,
)

M4_ROWS = {(5, 0, 0), (3, 1, 0), (1, 2, 0), (2, 0, 1)}


def rows_of(cands):
    return {(c.n2, c.t, c.n3) for c in cands}


def test_m4_table():
    rows = count_admissible(4)
    assert rows_of(rows) == M4_ROWS and len(rows) == 4
    assert all((c.d, c.k) == (2, 1) for c in rows)
    assert all(comb(4, 2) - 1 == c.n2 + 2 * c.t + 3 * c.n3 for c in rows)


def test_m3_rows():
    rows = count_admissible(3)
    assert {(c.d, c.k) for c in rows} == {(1, 1)}
    assert rows_of(rows) == {(2, 0, 0), (0, 1, 0)}


def test_refinement_only_removes_rows():
    for m in range(3, 10):
        assert rows_of(count_admissible(m)) <= rows_of(count_admissible(m, refine=False))


def test_mdr_lower_bound_examples():
    assert mdr_lower_bound(10) == 5
    assert mdr_lower_bound(11) == 6
    assert mdr_lower_bound(12) == 6


def test_hirzebruch_examples():
    assert hirzebruch_holds(Candidate(5, 1, 6, 4, 2)) is True
    assert hirzebruch_margin(Candidate(5, 1, 6, 4, 2)) == Fraction(1, 2)
    assert hirzebruch_holds(Candidate(8, 1, 0, 4, 14)) is True
    assert hirzebruch_holds(Candidate(2, 1, 3, 1, 0)) is None


def test_m4_nearly_free():
    cands = nearly_free_candidates(4)
    assert rows_of(cands) == {(3, 1, 0), (2, 0, 1)}
    for row in ((3, 1, 0), (2, 0, 1)):
        assert {c.exponents for c in cands if c.row == row} == {(1, 3), (2, 2)}
    assert all(c.tau == 6 for c in cands)


@pytest.mark.parametrize("m", [10, 11, 12])
def test_nonexistence(m):
    assert nearly_free_candidates(m) == []
    assert nearly_free_candidates(m, refine=False) == []
    assert existence_status(m) == "EMPTY"
    cert = nonexistence_certificate(m)
    assert cert["empty"] and verify_certificate(cert)


def test_m11_certificate_witness():
    cert = nonexistence_certificate(11)
    assert cert["eliminated_by"] == "mdr_bound"
    assert cert["witness"] == "d1 range empty: 6 > 5"


def test_m10_branch_identities():
    cert = nonexistence_certificate(10)
    ks = set()
    for b in cert["branches"]:
        assert b["exponents"] == [5, 5]
        k = b["k"]
        for r in b["rows_before_hirzebruch"]:
            ks.add(k)
            n2, t, n3 = r["n2"], r["t"], r["n3"]
            assert t + n3 == 15 + k
            assert t == 4 * k + n2
            assert n2 + n3 == 15 - 3 * k
            assert 4 * r["hirzebruch_margin"] == 5 - 9 * k - 9 * n2
        assert b["eliminated_by"] in ("hirzebruch", "tjurina_exponents")
    assert ks == {1, 2, 3, 4}


def test_m12_branch_identities():
    cert = nonexistence_certificate(12)
    ks = set()
    bounds = {}
    for b in cert["branches"]:
        assert b["exponents"] == [6, 6]
        k = b["k"]
        for r in b["rows_before_hirzebruch"]:
            ks.add(k)
            assert 2 * (r["t"] + r["n3"]) == 48 + 2 * k
            assert r["n2"] + r["n3"] == 18 - 3 * k
            assert r["hirzebruch_margin"] < 0
        if b["rows_before_hirzebruch"]:
            bounds[k] = b["tacnode_upper_bound"]
    assert ks == {1, 2, 3, 4, 5}
    # exact tacnode bounds floor(2/5 (8k + n2 + n3 - d)); k=3 gives 10 and k=4 gives 13
    assert bounds == {1: 5, 2: 8, 3: 10, 4: 13, 5: 16}


def test_degree_bound():
    assert degree_upper_bound() == 12
    assert degree_infeasibility_witness(13) == (7, 6)
    assert degree_infeasibility_witness(11) == (6, 5)
    assert degree_infeasibility_witness(12) is None
    assert list(exponent_range(13)) == []


@pytest.mark.parametrize("m", sorted(OPEN_DEGREES))
def test_open_degrees(m):
    assert nearly_free_candidates(m)
    assert existence_status(m) == "OPEN"


def test_candidates_subset_of_admissible():
    for m in range(3, 13):
        admissible = {(c.d, c.k, c.n2, c.t, c.n3) for c in count_admissible(m)}
        for c in nearly_free_candidates(m):
            assert (c.d, c.k, c.n2, c.t, c.n3) in admissible
            d1, d2 = c.exponents
            assert 2 * (c.t + c.n3) == tacnode_triple_sum_doubled(d1, d2, c.k)
            assert c.tau == tau_from_exponents(d1, d2)
            assert count_holds(c.d, c.k, c.n2, c.t, c.n3)


def test_fixture_combinatorics_are_candidates():
    for name, (lines, conics, row, tau, r) in FIXTURES.items():
        d, k = len(lines), len(conics)
        m = d + 2 * k
        found = [c for c in nearly_free_candidates(m) if (c.d, c.k, c.row) == (d, k, row)]
        assert found, name
        assert (r, m - r) in {c.exponents for c in found}


def test_hirzebruch_branch_toggle():
    rows = count_admissible(10, refine=False)
    assert _nearly_free_branch(rows, 5, 5) == []
    assert _nearly_free_branch(rows, 5, 5, apply_hirzebruch=False)
