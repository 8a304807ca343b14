"""Leading-sequence normal forms for C_n = F2[c_1..c_n] (x) E(e_1, e_1', ..., e_{2n-1}, e_{2n-1}').

A monomial of A_n is indexed by a sequence ``I = (a_1, eps_11, eps_21, ...,
a_n, eps_1n, eps_2n)`` (:class:`SeqS`) and a monomial ``c^K`` of C_n by
``K = (k_1..k_n; phi_11..phi_1n; phi_21..phi_2n)`` (:class:`SeqT`).  The
exterior generator ``e'_{2j-1}`` is taken as the orbit sum of
``y_1...y_{j-1} x_j'``, which spans the same algebra as the pi'-twisted class.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, Monomial, basis_codes, to_vector
from .classes import Variant, chern, quillen_e
from .gf2 import Subspace


@dataclass(frozen=True, order=True)
class SeqS:
    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 3 * self.n:
            raise ValueError("a sequence in S(n) has 3n entries")

    @property
    def a(self) -> tuple[int, ...]:
        return self.entries[0::3]

    @property
    def eps1(self) -> tuple[int, ...]:
        return self.entries[1::3]

    @property
    def eps2(self) -> tuple[int, ...]:
        return self.entries[2::3]

    @classmethod
    def from_monomial(cls, m: Monomial) -> "SeqS":
        return cls(m.n, m.sequence())

    @classmethod
    def from_code(cls, n: int, code: int) -> "SeqS":
        return cls.from_monomial(Monomial.decode(n, code))

    def monomial(self) -> Monomial:
        xm = sum(b << j for j, b in enumerate(self.eps1))
        xpm = sum(b << j for j, b in enumerate(self.eps2))
        return Monomial(self.n, self.a, xm, xpm)

    def __str__(self) -> str:
        return str(self.entries)


@dataclass(frozen=True)
class SeqT:
    n: int
    k: tuple[int, ...]
    phi1: tuple[int, ...]
    phi2: tuple[int, ...]

    def __post_init__(self) -> None:
        if not len(self.k) == len(self.phi1) == len(self.phi2) == self.n:
            raise ValueError("a sequence in T(n) has three blocks of length n")

    @property
    def degree(self) -> int:
        return sum(
            2 * (j + 1) * k + (2 * j + 1) * (p + q)
            for j, (k, p, q) in enumerate(zip(self.k, self.phi1, self.phi2))
        )

    def as_dict(self) -> dict:
        return {"k": list(self.k), "phi1": list(self.phi1), "phi2": list(self.phi2)}

    def __str__(self) -> str:
        parts = []
        for j, k in enumerate(self.k):
            if k:
                parts.append(f"c{j + 1}" + (f"^{k}" if k > 1 else ""))
        parts += [f"e{2 * j + 1}" for j, p in enumerate(self.phi1) if p]
        parts += [f"e{2 * j + 1}'" for j, p in enumerate(self.phi2) if p]
        return "*".join(parts) or "1"


def alpha(K: SeqT) -> SeqS:
    """Leading sequence of c^K, in closed form."""
    n = K.n
    out: list[int] = []
    for j in range(n):
        a = sum(K.k[j:]) + sum(K.phi1[j + 1:]) + sum(K.phi2[j + 1:])
        out += [a, K.phi1[j], K.phi2[j]]
    return SeqS(n, tuple(out))


def image_violations(I: SeqS, js=None) -> list[int]:
    """1-based ``j`` (among ``js``) where a_j - a_{j+1} < eps_1,j+1 + eps_2,j+1."""
    a, e1, e2 = I.a, I.eps1, I.eps2
    js = range(1, I.n) if js is None else js
    return [j for j in js if a[j - 1] - a[j] < e1[j] + e2[j]]


def in_image_alpha(I: SeqS) -> bool:
    return not image_violations(I)


def alpha_inverse(I: SeqS) -> SeqT:
    bad = image_violations(I)
    if bad:
        raise ValueError(f"sequence {I} is not in the image of alpha: condition fails at j={bad[0]}")
    a, e1, e2 = I.a, I.eps1, I.eps2
    n = I.n
    k = [a[j] - a[j + 1] - e1[j + 1] - e2[j + 1] for j in range(n - 1)] + [a[n - 1]]
    return SeqT(n, tuple(k), tuple(e1), tuple(e2))


@lru_cache(maxsize=1 << 15)
def c_monomial(K: SeqT) -> Element:
    """c^K expanded in A_n (e' in the primed-replaced form)."""
    n = K.n
    out = Element.one(n)
    for j in range(n):
        if K.phi1[j]:
            out = out * quillen_e(n, j + 1, Variant.PLAIN)
        if K.phi2[j]:
            out = out * quillen_e(n, j + 1, Variant.PRIMED_REPLACED)
    for j in range(n):
        if K.k[j]:
            out = out * _chern_power(n, j + 1, K.k[j])
    return out


@lru_cache(maxsize=None)
def _chern_power(n: int, i: int, k: int) -> Element:
    return chern(n, i) ** k


@lru_cache(maxsize=None)
def enumerate_T(n: int, d: int) -> tuple[SeqT, ...]:
    """All K in T(n) with c^K of degree d."""
    out = []
    for phis in itertools.product((0, 1), repeat=2 * n):
        p1, p2 = phis[:n], phis[n:]
        ext = sum((2 * j + 1) * (p1[j] + p2[j]) for j in range(n))
        rest = d - ext
        if rest < 0 or rest % 2:
            continue
        for k in _weighted((rest // 2), n):
            out.append(SeqT(n, k, p1, p2))
    return tuple(out)


def _weighted(total: int, n: int) -> list[tuple[int, ...]]:
    """Tuples k with sum (j+1) k_j = total."""
    if n == 0:
        return [()] if total == 0 else []
    w = n
    out = []
    for kn in range(total // w + 1):
        for head in _weighted(total - w * kn, n - 1):
            out.append(head + (kn,))
    return out


def leading_sequence(x: Element) -> SeqS:
    if not x:
        raise ValueError("the zero element has no leading sequence")
    return SeqS.from_code(x.n, max(x.terms))


def reduce(x: Element, n: int | None = None) -> tuple[list[SeqT], Element]:
    """Greedy leading-sequence reduction.

    Returns ``(certificate, remainder)``; the remainder is zero exactly when
    ``x`` lies in C_n, and then ``x`` is the sum of ``c^K`` over the
    certificate.  Inhomogeneous input is reduced degree by degree.
    """
    n = x.n if n is None else n
    if n != x.n:
        raise ValueError("generator count mismatch")
    certificate: list[SeqT] = []
    remainder = Element.zero(n)
    for part in x.homogeneous_parts().values():
        while part:
            I = leading_sequence(part)
            if not in_image_alpha(I):
                break
            K = alpha_inverse(I)
            part = part + c_monomial(K)
            certificate.append(K)
        remainder = remainder + part
    return certificate, remainder


@lru_cache(maxsize=None)
def stable_span(n: int, d: int) -> Subspace:
    """Span of all c^K of degree d inside A_n."""
    vecs = [to_vector(c_monomial(K), d) for K in enumerate_T(n, d)]
    return Subspace.span(vecs, len(basis_codes(n, d)))


def membership_oracle(x: Element, n: int | None = None) -> bool:
    """Linear-algebra membership test, independent of the leading-sequence argument."""
    n = x.n if n is None else n
    if n != x.n:
        raise ValueError("generator count mismatch")
    return all(
        to_vector(part, d) in stable_span(n, d) for d, part in x.homogeneous_parts().items()
    )


def is_member(x: Element) -> bool:
    return not reduce(x)[1]


def random_T(n: int, max_degree: int, rng: random.Random) -> SeqT:
    d = rng.randint(0, max_degree)
    options = enumerate_T(n, d)
    while not options:
        d = rng.randint(0, max_degree)
        options = enumerate_T(n, d)
    return rng.choice(options)


def random_element(n: int, d: int, rng: random.Random, member_bias: float = 0.5) -> Element:
    """Random homogeneous element of degree d, a member of C_n with probability ~ member_bias."""
    if rng.random() < member_bias:
        ks = enumerate_T(n, d)
        out = Element.zero(n)
        for K in rng.sample(ks, min(len(ks), rng.randint(1, 3))):
            out = out + c_monomial(K)
        return out
    codes = basis_codes(n, d)
    return Element.from_codes(n, rng.sample(codes, min(len(codes), rng.randint(1, 4))))

