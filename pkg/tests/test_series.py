from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf2coh.series import (
    RationalSeries,
    chi0,
    chi1,
    chi2,
    chi_a3,
    chi_s3,
    equality_witness_order,
    lim1_series,
    one_minus,
    pmul,
    poly_ring,
    verify_chi_decomposition,
)


def brute_series(num, den, order):
    """Power series coefficients by exact Fraction arithmetic."""
    out = []
    for k in range(order + 1):
        acc = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return [int(c) for c in out]


def test_known_prefixes():
    assert chi0().expand(12) == [1, 0, 0, 2, 1, 2, 2, 2, 5, 4, 3, 6, 7]
    assert chi2().expand(8) == [0, 2, 2, 4, 6, 6, 8, 10, 10]
    assert lim1_series().expand(8) == [0, 0, 0, 2, 0, 0, 1, 0, 0]


def test_invariant_ring_closed_forms():
    a3 = RationalSeries(pmul((1,), (1, 0, 0, 0, 0, 0, 1)), pmul(one_minus(4), one_minus(6)))
    assert chi_a3().equals(a3)
    assert chi_s3().equals(RationalSeries((1,), pmul(one_minus(4), one_minus(6))))


def test_poly_ring_counts():
    # dim F2[y1..yn] in degree 2k is the number of monomials of total exponent k
    from math import comb
    for n in (1, 2, 3):
        c = poly_ring(n).expand(20)
        for d in range(21):
            assert c[d] == (comb(d // 2 + n - 1, n - 1) if d % 2 == 0 else 0)


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
    st.lists(st.integers(-3, 3), min_size=0, max_size=5),
)
def test_expand_matches_fraction_division(num, tail):
    den = [1] + tail
    s = RationalSeries.of(num, den)
    assert s.expand(25) == brute_series(num, den, 25)


@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=5),
    st.lists(st.integers(-4, 4), min_size=1, max_size=5),
)
def test_arithmetic_agrees_with_coefficients(p, q):
    a = RationalSeries.of(p, [1, -1])
    b = RationalSeries.of(q, [1, 0, -1])
    sa, sb = a.expand(20), b.expand(20)
    assert (a + b).expand(20) == [x + y for x, y in zip(sa, sb)]
    assert (a - b).expand(20) == [x - y for x, y in zip(sa, sb)]
    prod = [sum(sa[i] * sb[k - i] for i in range(k + 1)) for k in range(21)]
    assert (a * b).expand(20) == prod


def test_equality_is_cross_multiplication():
    a = RationalSeries.of([1], [1, -1])
    b = RationalSeries.of([1, 1], [1, 0, -1])
    assert a.equals(b)
    c = b + RationalSeries.of([0] * 9 + [1])
    assert not a.equals(c)
    k = equality_witness_order(a, c)
    assert a.expand(k) != c.expand(k)


def test_non_unit_denominator_rejected():
    with pytest.raises(ValueError):
        RationalSeries.of([1], [2, 1]).expand(3)


def test_euler_identity_coefficientwise():
    lhs = [x + y for x, y in zip(chi0().expand(60), chi2().expand(60))]
    rhs = [x + y for x, y in zip(chi1().expand(60), lim1_series().expand(60))]
    assert lhs == rhs


def test_decomposition_records():
    recs = verify_chi_decomposition(60)
    assert {r["identity"] for r in recs} >= {
        "chi20-from-regular-module", "chi21-sum", "chi22-sum", "chi2-assembly", "chi-identity",
    }
    for r in recs:
        assert r["exact"] and r["coefficientwise"], r
