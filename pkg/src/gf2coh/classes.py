"""Named classes of A_n: Chern classes, the exterior e-classes and their twists.

All classes are given by their restrictions to the diagonal subgroup, i.e. as
elements of A_n.  The twist ``pi'`` fixes ``y_i`` and sends ``x_i`` to
``x_i + x_i'``; ``pi`` is the identity.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .algebra import AlgebraMap, Element, Monomial, symmetrize


class Variant(str, Enum):
    PLAIN = "plain"
    PRIMED = "primed"
    PRIMED_REPLACED = "primed_replaced"


def chern(n: int, i: int) -> Element:
    """i-th elementary symmetric polynomial in y_1..y_n."""
    if not 1 <= i <= n:
        raise ValueError(f"Chern class index {i} outside 1..{n}")
    return _chern(n, i)


@lru_cache(maxsize=None)
def _chern(n: int, i: int) -> Element:
    exp = (1,) * i + (0,) * (n - i)
    return symmetrize(Element.from_monomials(n, [Monomial(n, exp)]))


def quillen_e(n: int, k: int, variant: Variant | str = Variant.PLAIN) -> Element:
    """Class of degree 2k-1: orbit sum of ``y_1...y_{k-1}`` times x_k, x_k + x_k' or x_k'."""
    if not 1 <= k <= n:
        raise ValueError(f"e-class index k={k} outside 1..{n}")
    return _quillen_e(n, k, Variant(variant))


@lru_cache(maxsize=None)
def _quillen_e(n: int, k: int, variant: Variant) -> Element:
    exp = (1,) * (k - 1) + (0,) * (n - k + 1)
    bit = 1 << (k - 1)
    monos = []
    if variant in (Variant.PLAIN, Variant.PRIMED):
        monos.append(Monomial(n, exp, bit, 0))
    if variant in (Variant.PRIMED, Variant.PRIMED_REPLACED):
        monos.append(Monomial(n, exp, 0, bit))
    return symmetrize(Element.from_monomials(n, monos))


def twist(n: int) -> AlgebraMap:
    """``pi'^*``: x_i -> x_i + x_i', fixing y_i and x_i'."""
    return AlgebraMap(
        n,
        n,
        tuple(Element.y(n, i) for i in range(1, n + 1)),
        tuple(Element.x(n, i) + Element.xp(n, i) for i in range(1, n + 1)),
        tuple(Element.xp(n, i) for i in range(1, n + 1)),
    )


def sl_restrict(n: int) -> AlgebraMap:
    """A_n -> A_{n-1} imposing sum(y) = sum(x) = sum(x') = 0 on the last index."""
    if n < 2:
        raise ValueError("sl_restrict needs n >= 2")
    m = n - 1

    def total(gen) -> Element:
        out = Element.zero(m)
        for i in range(1, m + 1):
            out = out + gen(m, i)
        return out

    return AlgebraMap(
        n,
        m,
        tuple(Element.y(m, i) for i in range(1, m + 1)) + (total(Element.y),),
        tuple(Element.x(m, i) for i in range(1, m + 1)) + (total(Element.x),),
        tuple(Element.xp(m, i) for i in range(1, m + 1)) + (total(Element.xp),),
    )


# The generators of the inverse limit for n = 2, written through c_i and e_i.
# e' here is the pi'-twisted class (x_k + x_k'), as for GL_2.

def _b2() -> Element:
    return chern(2, 1) ** 2 + chern(2, 2)


def _b3() -> Element:
    return chern(2, 1) * chern(2, 2)


def _d3(primed: bool) -> Element:
    return quillen_e(2, 2, Variant.PRIMED if primed else Variant.PLAIN)


def _d5(primed: bool) -> Element:
    v = Variant.PRIMED if primed else Variant.PLAIN
    return chern(2, 1) * quillen_e(2, 2, v) + chern(2, 2) * quillen_e(2, 1, v)


LIMIT_CLASS_NAMES = ("b2", "b3", "d3", "d3p", "d5", "d5p")


@lru_cache(maxsize=None)
def limit_class(name: str) -> Element:
    """b2, b3, d3, d3p, d5, d5p as elements of A_2."""
    table = {
        "b2": _b2,
        "b3": _b3,
        "d3": lambda: _d3(False),
        "d3p": lambda: _d3(True),
        "d5": lambda: _d5(False),
        "d5p": lambda: _d5(True),
    }
    if name not in table:
        raise KeyError(f"unknown limit class {name!r}")
    return table[name]()


def verify_psi_phi_composition() -> list[dict]:
    """Push c2, c3, q3, q3', q5, q5' from A_3 through ``sl_restrict(3)``.

    Each record compares the image with the corresponding limit class of A_2.
    """
    f = sl_restrict(3)
    tw = twist(3)
    sources = {
        "c2": ("b2", chern(3, 2)),
        "c3": ("b3", chern(3, 3)),
        "q3": ("d3", quillen_e(3, 2)),
        "q3p": ("d3p", tw(quillen_e(3, 2))),
        "q5": ("d5", quillen_e(3, 3)),
        "q5p": ("d5p", tw(quillen_e(3, 3))),
    }
    out = []
    for src, (target, elem) in sources.items():
        image = f(elem)
        expected = limit_class(target)
        out.append(
            {
                "source": src,
                "target": target,
                "image": str(image),
                "expected": str(expected),
                "passed": image == expected,
            }
        )
    return out
