"""Poincare series as exact rational functions in t with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Poly = tuple[int, ...]  # coefficient of t^i at index i, no trailing zeros


def poly(coeffs: Sequence[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def monomial(k: int, coeff: int = 1) -> Poly:
    return poly([0] * k + [coeff])


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def ppow(a: Poly, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = pmul(out, a)
    return out


def pdeg(a: Poly) -> int:
    return len(a) - 1


def pformat(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if i == 0:
            s = str(abs(c))
        elif abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}{mono}"
        parts.append(("-" if c < 0 else "+") + s)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def one_minus(k: int) -> Poly:
    """1 - t^k."""
    return padd((1,), monomial(k, -1))


def one_plus(k: int) -> Poly:
    return padd((1,), monomial(k))


@dataclass(frozen=True)
class RationalSeries:
    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        if not self.den or self.den[0] == 0:
            raise ValueError("denominator must have a non-zero constant term")

    @classmethod
    def of(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> "RationalSeries":
        return cls(poly(num), poly(den))

    def expand(self, order: int) -> list[int]:
        """Coefficients of t^0..t^order by exact long division."""
        return expand(self, order)

    def __add__(self, other: "RationalSeries | int") -> "RationalSeries":
        other = _coerce(other)
        return RationalSeries(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)), pmul(self.den, other.den)
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(pneg(self.num), self.den)

    def __sub__(self, other: "RationalSeries | int") -> "RationalSeries":
        return self + (-_coerce(other))

    def __mul__(self, other: "RationalSeries | int") -> "RationalSeries":
        other = _coerce(other)
        return RationalSeries(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def equals(self, other: "RationalSeries | int") -> bool:
        other = _coerce(other)
        return pmul(self.num, other.den) == pmul(other.num, self.den)

    def __str__(self) -> str:
        return f"({pformat(self.num)})/({pformat(self.den)})"


def _coerce(s: "RationalSeries | int | Sequence[int]") -> RationalSeries:
    if isinstance(s, RationalSeries):
        return s
    if isinstance(s, int):
        return RationalSeries.of([s])
    return RationalSeries.of(s)


def expand(s: RationalSeries, order: int) -> list[int]:
    c0 = s.den[0]
    if c0 not in (1, -1):
        raise ValueError("constant term of the denominator is not a unit")
    out: list[int] = []
    for k in range(order + 1):
        acc = s.num[k] if k < len(s.num) else 0
        for j in range(1, min(k, len(s.den) - 1) + 1):
            acc -= s.den[j] * out[k - j]
        out.append(acc * c0)  # c0 is its own inverse
    return out


def equality_witness_order(a: RationalSeries, b: RationalSeries) -> int:
    """Expansion order that decides equality of ``a`` and ``b``.

    The expansion of ``a - b`` starts at the lowest term of the
    cross-multiplied numerator difference, so agreement up to its degree
    forces that difference to vanish.
    """
    diff = psub(pmul(a.num, b.den), pmul(b.num, a.den))
    return max(pdeg(diff), 0) + 1


# the series of the computation

def _den46() -> Poly:
    return pmul(one_minus(4), one_minus(6))


def chi0() -> RationalSeries:
    """F2[b2, b3] (x) E(d3, d3', d5, d5')."""
    return RationalSeries(pmul(ppow(one_plus(3), 2), ppow(one_plus(5), 2)), _den46())


def chi1() -> RationalSeries:
    """F2[c1, c2] (x) E(e1, e1', e3, e3')."""
    return RationalSeries(
        pmul(ppow(one_plus(1), 2), ppow(one_plus(3), 2)), pmul(one_minus(2), one_minus(4))
    )


def chi2() -> RationalSeries:
    """Closed form for Hom_{F2[S3]}(St, A_2)."""
    a = pmul(monomial(2, 2), poly([1, 0, 3, 0, 3, 0, 1]))
    b = pmul(monomial(1, 2), poly([1, 0, 2, 0, 2, 0, 2, 0, 1]))
    return RationalSeries(padd(a, b), _den46())


def chi20() -> RationalSeries:
    """Hom(St, F2[y1, y2])."""
    return RationalSeries(monomial(2), pmul(one_minus(2), one_minus(6)))


def chi21_closed() -> RationalSeries:
    """Hom(St, St (x) St (x) F2[y1, y2])."""
    return RationalSeries(poly([1, 0, 3, 0, 3, 0, 1]), _den46())


def chi22_closed() -> RationalSeries:
    """Hom(St, St (x) F2[y1, y2])."""
    return RationalSeries(poly([1, 0, 1, 0, 1, 0, 1]), _den46())


def chi_a3() -> RationalSeries:
    """A_3-invariants of F2[y1, y2]: free over F2[b2, b3] on 1 and a degree-6 class."""
    return RationalSeries(one_plus(6), _den46())


def chi_s3() -> RationalSeries:
    return RationalSeries((1,), _den46())


def poly_ring(n: int) -> RationalSeries:
    """F2[y_1..y_n] with |y| = 2."""
    return RationalSeries((1,), ppow(one_minus(2), n))


def algebra_series(n: int) -> RationalSeries:
    """A_n = F2[y_1..y_n] (x) E(x_1, x_1', ..., x_n, x_n')."""
    return RationalSeries(ppow(one_plus(1), 2 * n), ppow(one_minus(2), n))


def lim1_series() -> RationalSeries:
    """2 t^3 + t^6."""
    return RationalSeries.of([0, 0, 0, 2, 0, 0, 1])


def chi_identity_numerator() -> Poly:
    """Numerator of chi0 + chi2 - chi1 over (1-t^4)(1-t^6)."""
    return psub(
        padd(chi0().num, chi2().num),
        pmul(chi1().num, poly([1, 0, 1, 0, 1])),
    )


def verify_chi_decomposition(order: int = 60) -> list[dict]:
    """Check every series identity exactly and coefficientwise to ``order``."""
    c20 = chi20()
    c21 = 3 * c20 + chi_a3()
    c22 = c20 + chi_a3()
    t = RationalSeries.of([0, 1])
    t2 = RationalSeries.of([0, 0, 1])
    assembled = RationalSeries.of([1, 0, 2, 0, 1]) * c20 + t2 * c21 + 2 * (t + t * t2) * c22

    identities = [
        ("chi20-from-regular-module", 2 * c20 + chi_a3(), poly_ring(2)),
        ("chi21-sum", c21, chi21_closed()),
        ("chi22-sum", c22, chi22_closed()),
        ("chi2-assembly", assembled, chi2()),
        ("chi-identity", chi0() + chi2(), chi1() + lim1_series()),
        (
            "chi-identity-numerator",
            RationalSeries(chi_identity_numerator(), (1,)),
            RationalSeries(pmul(poly([0, 0, 0, 2, 0, 0, 1]), _den46()), (1,)),
        ),
        (
            "chi-identity-numerator-expanded",
            RationalSeries(chi_identity_numerator(), (1,)),
            RationalSeries.of([0, 0, 0, 2, 0, 0, 1, -2, 0, -2, -1, 0, -1, 2, 0, 0, 1]),
        ),
    ]
    out = []
    for name, lhs, rhs in identities:
        exact = lhs.equals(rhs)
        lc, rc = lhs.expand(order), rhs.expand(order)
        mismatch = next((k for k in range(order + 1) if lc[k] != rc[k]), None)
        diff = psub(pmul(lhs.num, rhs.den), pmul(rhs.num, lhs.den))
        out.append(
            {
                "identity": name,
                "lhs": str(lhs),
                "rhs": str(rhs),
                "exact": exact,
                "coefficientwise": mismatch is None,
                "first_mismatch": mismatch,
                "difference_numerator": pformat(diff),
                "passed": exact and mismatch is None,
            }
        )
    return out
