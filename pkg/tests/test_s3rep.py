import itertools

import pytest

from gf2coh.gf2 import BitMatrix, rank
from gf2coh.s3rep import (
    NotProjectiveError,
    S3Action,
    count_projective_summands,
    diagonal_action,
    hom_from_st,
    idempotent,
    idempotent_split,
    invariants,
    is_sign_cosets,
    is_steinberg,
    regular,
    sign_cosets,
    steinberg,
    trivial,
)
from gf2coh.series import chi2, chi_a3, chi_s3


def test_module_relations():
    for m in (steinberg(), trivial(), sign_cosets(), regular()):
        assert m.satisfies_relations()
    for d in range(9):
        assert diagonal_action(d).satisfies_relations()


@pytest.mark.parametrize(
    "module,expected",
    [
        (lambda: steinberg().tensor(steinberg()), (1, 1)),
        (lambda: sign_cosets().tensor(steinberg()), (2, 0)),
        (regular, (2, 1)),
        (lambda: steinberg().direct_sum(sign_cosets()), (1, 1)),
    ],
)
def test_projective_decompositions(module, expected):
    assert count_projective_summands(module()) == expected


def test_summands_identified():
    sq = steinberg().tensor(steinberg())
    im, ker = idempotent_split(sq)
    assert is_sign_cosets(sq.restrict(im))
    assert is_steinberg(sq.restrict(ker))


def test_non_projective_rejected():
    with pytest.raises(NotProjectiveError):
        count_projective_summands(trivial())


def test_idempotent_is_idempotent():
    for m in (regular(), steinberg().tensor(regular())):
        e = idempotent(m)
        assert e @ e == e


def test_hom_dimensions():
    assert hom_from_st(steinberg()).dim == 1
    assert hom_from_st(sign_cosets()).dim == 0
    assert hom_from_st(trivial()).dim == 0
    assert hom_from_st(regular()).dim == 2


def brute_hom_dim(m: S3Action) -> int:
    """Count equivariant maps St -> M by enumerating all pairs (f(a), f(b))."""
    st = steinberg()
    count = 0
    for u, v in itertools.product(range(1 << m.dim), repeat=2):
        def f(w):
            return (u if w & 1 else 0) ^ (v if w & 2 else 0)
        if all(
            f(g.mul_vec(w)) == h.mul_vec(f(w))
            for g, h in ((st.sigma, m.sigma), (st.tau, m.tau))
            for w in (1, 2)
        ):
            count += 1
    return count.bit_length() - 1


@pytest.mark.parametrize("d", range(0, 3))
def test_hom_against_enumeration(d):
    m = diagonal_action(d)
    assert hom_from_st(m).dim == brute_hom_dim(m)


def test_chi2_hom_dims_low_degrees():
    coeffs = chi2().expand(12)
    for d in range(13):
        assert hom_from_st(diagonal_action(d)).dim == coeffs[d]


def test_invariants_match_series():
    a3, s3 = chi_a3().expand(20), chi_s3().expand(20)
    for d in range(21):
        poly = diagonal_action(d, exterior=False)
        assert invariants(poly, "A3").dim == a3[d]
        assert invariants(poly, "sigma-cyclic").dim == a3[d]
        assert invariants(poly, "S3").dim == s3[d]


def test_invariants_unknown_subgroup():
    with pytest.raises(ValueError):
        invariants(steinberg(), "C2")


def test_restrict_rejects_non_invariant_subspace():
    from gf2coh.gf2 import Subspace
    with pytest.raises(ValueError):
        steinberg().restrict(Subspace.span([0b01], 2))
