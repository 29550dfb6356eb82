import pytest

from conftest import FIXTURES, fixture_arrangement
from nearfree.arrangement import defining_polynomial
from nearfree.errors import StabilizationFailure
from nearfree.exactpoly import HPoly
from nearfree.jacobian import (
    near_free_lhs,
    exponent_identity_holds,
    expected_macaulay_shape,
    jacobian_generators,
    koszul_relation,
    macaulay_matrix,
    mdr,
    milnor_dim,
    minimal_relation,
    nearly_free_verdict,
    relations,
    syzygy_report,
    tjurina_global,
    verify_relation,
)
from nearfree.linalg import RatMatrix, rank_exact

x, y, z = HPoly.var("x"), HPoly.var("y"), HPoly.var("z")
XYZ = x * y * z


def f_of(name):
    return defining_polynomial(fixture_arrangement(name))


def test_generators():
    assert jacobian_generators(XYZ) == (y * z, x * z, x * y)
    assert jacobian_generators(x**3) == (3 * x**2, HPoly.zero(2), HPoly.zero(2))
    f3 = f_of("c3")
    gens = jacobian_generators(f3)
    assert all(g.degree == 2 for g in gens)
    assert x * gens[0] + y * gens[1] + z * gens[2] == 3 * f3


def test_macaulay_shapes():
    m3 = macaulay_matrix(f_of("c3"), 1).matrix
    assert (m3.rows, m3.cols) == (10, 9) == expected_macaulay_shape(3, 1)
    m7 = macaulay_matrix(f_of("c7"), 3).matrix
    assert (m7.rows, m7.cols) == (55, 30) == expected_macaulay_shape(7, 3)


def test_xyz():
    r, witness, dims = minimal_relation(XYZ)
    assert r == 1 and dims == {0: 0, 1: 2}
    assert verify_relation(XYZ, witness)
    # (x, -y, 0) is in the span of the computed relations
    rels = relations(XYZ, 1)
    target = (x, -y, HPoly.zero(1))
    rows = [sum((p.coefficient_vector() for p in rel), []) for rel in rels]
    with_target = rows + [sum((p.coefficient_vector() for p in target), [])]
    assert rank_exact(RatMatrix.from_rows(with_target)) == rank_exact(RatMatrix.from_rows(rows)) == 2
    assert tjurina_global(XYZ) == 3
    assert not nearly_free_verdict(3, 1, 3).nearly_free


def test_smooth_conic_milnor():
    q = x**2 + y**2 + z**2
    assert milnor_dim(q, 4) == 0
    assert milnor_dim(q, 0) == 1
    assert tjurina_global(q) == 0


def test_milnor_dim_zero_for_all_fixtures(fixture_name):
    assert milnor_dim(f_of(fixture_name), 0) == 1


def test_fixture_mdr_and_tau(fixture_name):
    *_, tau, r = FIXTURES[fixture_name]
    rep = syzygy_report(f_of(fixture_name))
    assert rep.mdr == r
    assert rep.tau == tau
    assert verify_relation(f_of(fixture_name), rep.witness)
    assert max(p.degree for p in rep.witness) == r
    verdict = nearly_free_verdict(rep.m, rep.mdr, rep.tau)
    assert verdict.nearly_free and verdict.exponents == (r, rep.m - r)


def test_verdict_examples():
    v = nearly_free_verdict(3, 1, 2)
    assert v.nearly_free and v.exponents == (1, 2)
    v = nearly_free_verdict(7, 3, 26)
    assert v.nearly_free and v.exponents == (3, 4)
    v = nearly_free_verdict(3, 1, 3)
    assert not v.nearly_free and v.exponents is None


def test_f3_milnor_stabilizes_at_two():
    f3 = f_of("c3")
    assert [milnor_dim(f3, k) for k in range(3, 9)] == [2] * 6


def test_koszul_guarantee(fixture_name):
    f = f_of(fixture_name)
    assert verify_relation(f, koszul_relation(f))
    assert relations(f, f.degree - 1)


def test_kernel_dimension_monotone():
    for name in ("c3", "c4", "c5", "c7"):
        f = f_of(name)
        dims = [len(relations(f, r)) for r in range(f.degree)]
        assert dims == sorted(dims)


def test_cone_diagnostic():
    rep = syzygy_report(x**3 + y**3)
    assert rep.mdr == 0
    assert any("cone" in n for n in rep.notes)


def test_non_reduced_fails_to_stabilize():
    with pytest.raises(StabilizationFailure):
        tjurina_global(x**2 * y)


def test_mdr_of_triangle():
    assert mdr(XYZ) == 1


def test_exponent_identity_grid():
    for d1 in range(0, 9):
        for d2 in range(0, 12):
            assert exponent_identity_holds(d1, d2)
            m = d1 + d2
            assert near_free_lhs(m, d1) - 1 == d1**2 + d2**2 + d1 * d2 - d1 - 2 * d2
