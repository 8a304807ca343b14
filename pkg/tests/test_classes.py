import itertools

import pytest

from gf2coh.algebra import Element
from gf2coh.classes import (
    LIMIT_CLASS_NAMES,
    Variant,
    chern,
    limit_class,
    quillen_e,
    sl_restrict,
    twist,
    verify_psi_phi_composition,
)
from gf2coh.grammar import parse


def elementary_symmetric(n, i):
    out = Element.zero(n)
    for sub in itertools.combinations(range(1, n + 1), i):
        term = Element.one(n)
        for j in sub:
            term = term * Element.y(n, j)
        out = out + term
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chern_is_elementary_symmetric(n):
    for i in range(1, n + 1):
        c = chern(n, i)
        assert c == elementary_symmetric(n, i)
        assert c.degree() == 2 * i


def test_chern_index_checked():
    with pytest.raises(ValueError):
        chern(2, 3)
    with pytest.raises(ValueError):
        quillen_e(2, 0)


def test_e_classes_small_cases():
    assert quillen_e(3, 2) == parse("y1*x2 + y2*x1 + y1*x3 + y3*x1 + y2*x3 + y3*x2", 3)
    assert quillen_e(2, 1, Variant.PRIMED_REPLACED) == parse("xp1 + xp2", 2)
    assert quillen_e(2, 1, "primed") == parse("x1 + x2 + xp1 + xp2", 2)
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert quillen_e(n, k).degree() == 2 * k - 1


def test_twist_relates_variants():
    for n in (2, 3, 4):
        tw = twist(n)
        for k in range(1, n + 1):
            assert tw(quillen_e(n, k)) == quillen_e(n, k, Variant.PRIMED)


def test_sl_restrict_kills_sums():
    f = sl_restrict(3)
    assert f(chern(3, 1)) == Element.zero(2)
    assert f(Element.x(3, 1) + Element.x(3, 2) + Element.x(3, 3)) == Element.zero(2)
    with pytest.raises(ValueError):
        sl_restrict(1)


def test_psi_phi_table():
    recs = {r["source"]: r for r in verify_psi_phi_composition()}
    assert set(recs) == {"c2", "c3", "q3", "q3p", "q5", "q5p"}
    for r in recs.values():
        assert r["passed"], r
    assert recs["q3"]["image"] == "y1*x2+y2*x1"


def test_limit_classes_by_hand():
    y1, y2, x1, x2 = (parse(s, 2) for s in ("y1", "y2", "x1", "x2"))
    assert limit_class("b2") == y1 ** 2 + y1 * y2 + y2 ** 2
    assert limit_class("b3") == y1 * y1 * y2 + y1 * y2 * y2
    assert limit_class("d5") == y1 ** 2 * x2 + y2 ** 2 * x1
    assert len(LIMIT_CLASS_NAMES) == 6
    with pytest.raises(KeyError):
        limit_class("b4")
