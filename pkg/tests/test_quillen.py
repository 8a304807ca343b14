import pytest

from gf2coh import quillen as ql
from gf2coh.algebra import to_vector
from gf2coh.s3rep import diagonal_action
from gf2coh.series import chi0, chi1, lim1_series


def brute_lim_dim(d):
    """Count x in F(E_1)_d whose image is fixed by sigma, by enumeration."""
    fe1 = ql.fe1_basis(d)
    sig = diagonal_action(d).sigma
    count = 0
    for mask in range(1 << fe1.dim):
        w = 0
        for i, img in enumerate(fe1.images):
            if (mask >> i) & 1:
                w ^= img
        count += sig.mul_vec(w) == w
    return count.bit_length() - 1


@pytest.mark.parametrize("d", range(0, 9))
def test_lim_dim_against_enumeration(d):
    assert ql.lim_degree(d).lim_dim == brute_lim_dim(d)


def test_fe1_dims_match_chi1():
    c = chi1().expand(24)
    for d in range(25):
        assert ql.fe1_basis(d).dim == c[d]
        assert ql.fe1_basis(d).is_independent()


def test_lim_and_lim1_table():
    lim, lim1 = chi0().expand(24), lim1_series().expand(24)
    for d in range(25):
        r = ql.lim_degree(d)
        assert r.passed, d
        assert (r.lim_dim, r.lim1_dim) == (lim[d], lim1[d])
        assert r.lim_dim + r.phi_rank == r.fe1_dim
    assert [d for d in range(25) if ql.lim_degree(d).lim1_dim] == [3, 6]


def test_lim1_representatives_are_equivariant():
    for d in (3, 6):
        reps = ql.lim_degree(d).lim1_representatives
        assert len(reps) == ql.lim_degree(d).lim1_dim
        act = diagonal_action(d)
        for u, v in reps:
            uv, vv = to_vector(u, d), to_vector(v, d)
            assert act.tau.mul_vec(uv) == vv
            assert act.sigma.mul_vec(uv) == vv


def test_generators_and_subalgebra():
    for g in ql.verify_generators():
        assert g["passed"], g
    for r in ql.verify_lim_equals_subalgebra(24):
        assert r["passed"], r
    with pytest.raises(ValueError):
        ql.verify_lim_equals_subalgebra(5)


def test_lim_basis_is_sigma_fixed():
    for d in range(13):
        act = diagonal_action(d)
        for v in ql.lim_degree(d).lim_basis.vectors:
            assert act.sigma.mul_vec(v) == v


def test_xs_rows():
    rows = ql.xs_borel_series(12)
    assert [r["dim"] for r in rows] == [1, 0, 0, 2, 3, 2, 2, 3, 5, 4, 3, 6, 7]
    assert ql.suspension_classes(rows) == [4, 4, 7]
    assert [r["dim"] for r in ql.xs_borel_series(24)] == ql.expected_xs_dims(24)


def test_euler():
    assert all(ql.euler_check(d) for d in range(25))
