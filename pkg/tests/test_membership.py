import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf2coh.algebra import Element, basis_codes
from gf2coh.classes import Variant, chern, quillen_e
from gf2coh.grammar import parse
from gf2coh.series import RationalSeries, one_minus, one_plus, pmul
from gf2coh.membership import (
    SeqS,
    SeqT,
    alpha,
    alpha_inverse,
    c_monomial,
    enumerate_T,
    image_violations,
    in_image_alpha,
    is_member,
    leading_sequence,
    membership_oracle,
    random_element,
    reduce,
)


@st.composite
def seq_t(draw, n=None):
    n = n or draw(st.integers(1, 4))
    k = tuple(draw(st.integers(0, 3)) for _ in range(n))
    p1 = tuple(draw(st.integers(0, 1)) for _ in range(n))
    p2 = tuple(draw(st.integers(0, 1)) for _ in range(n))
    return SeqT(n, k, p1, p2)


def product_form(K):
    """c^K built directly from the class definitions, without caching tricks."""
    n = K.n
    out = Element.one(n)
    for j in range(n):
        out = out * chern(n, j + 1) ** K.k[j]
        if K.phi1[j]:
            out = out * quillen_e(n, j + 1)
        if K.phi2[j]:
            out = out * quillen_e(n, j + 1, Variant.PRIMED_REPLACED)
    return out


@settings(max_examples=200)
@given(seq_t())
def test_leading_sequence_is_alpha(K):
    x = c_monomial(K)
    assert x == product_form(K)
    assert x.degree() == K.degree
    assert leading_sequence(x) == alpha(K)


@settings(max_examples=200)
@given(seq_t())
def test_alpha_roundtrip(K):
    I = alpha(K)
    assert in_image_alpha(I)
    assert alpha_inverse(I) == K


def test_alpha_inverse_names_failing_index():
    I = SeqS(2, (0, 0, 0, 0, 1, 0))
    assert image_violations(I) == [1]
    with pytest.raises(ValueError, match="j=1"):
        alpha_inverse(I)


def test_enumerate_T_counts():
    # the number of K of degree d is the dimension of C_n in degree d
    for n in (1, 2, 3):
        num, den = (1,), (1,)
        for j in range(1, n + 1):
            num = pmul(num, pmul(one_plus(2 * j - 1), one_plus(2 * j - 1)))
            den = pmul(den, one_minus(2 * j))
        coeffs = RationalSeries(num, den).expand(14)
        for d in range(15):
            ks = enumerate_T(n, d)
            assert len(ks) == coeffs[d]
            assert all(K.degree == d for K in ks)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reduce_agrees_with_oracle_on_monomials(n):
    for d in range(9):
        for c in basis_codes(n, d):
            x = Element(n, frozenset({c}))
            assert is_member(x) == membership_oracle(x)


def test_certificates_reconstruct():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        x = random_element(n, rng.randint(0, 12), rng)
        cert, rem = reduce(x)
        total = rem
        for K in cert:
            total = total + c_monomial(K)
        assert total == x
        assert (not rem) == membership_oracle(x)
        if rem:
            assert not in_image_alpha(leading_sequence(rem.homogeneous_parts()[max(rem.degrees())]))


def test_examples():
    assert is_member(parse("x1 + x2", 2))
    assert not is_member(parse("x1", 2))
    assert is_member(parse("b2*d3", 2))
    assert is_member(parse("c1*e3 + c2", 3))
    assert reduce(Element.zero(3)) == ([], Element.zero(3))


def test_generator_count_mismatch():
    with pytest.raises(ValueError):
        reduce(Element.one(2), n=3)
    with pytest.raises(ValueError):
        membership_oracle(Element.one(2), n=3)


def test_seq_validation():
    with pytest.raises(ValueError):
        SeqS(2, (0, 0, 0))
    with pytest.raises(ValueError):
        SeqT(2, (0,), (0, 0), (0, 0))
    assert str(SeqT(2, (2, 1), (1, 0), (0, 1))) == "c1^2*c2*e1*e3'"
