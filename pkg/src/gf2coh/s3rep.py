"""F2[S3]-modules: the Steinberg module, the action on A_2, Hom(St, -).

S3 is generated by an element ``sigma`` of order 3 and an involution ``tau``
with ``tau sigma = sigma^2 tau``.  A module is given by the two matrices;
matrices act on column vectors, stored as bit-vectors (see :mod:`gf2coh.gf2`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraMap, Element, basis_codes, from_vector, to_vector
from .gf2 import BitMatrix, Subspace, image, intersect, kernel_basis, rank


@dataclass(frozen=True)
class S3Action:
    dim: int
    sigma: BitMatrix
    tau: BitMatrix
    degree: int | None = None

    def __post_init__(self) -> None:
        for m in (self.sigma, self.tau):
            if (m.nrows, m.ncols) != (self.dim, self.dim):
                raise ValueError("action matrices must be dim x dim")

    def satisfies_relations(self) -> bool:
        one = BitMatrix.identity(self.dim)
        s, t = self.sigma, self.tau
        return s ** 3 == one and t @ t == one and t @ s == s @ s @ t

    def tensor(self, other: "S3Action") -> "S3Action":
        return S3Action(
            self.dim * other.dim, self.sigma.kron(other.sigma), self.tau.kron(other.tau)
        )

    def direct_sum(self, other: "S3Action") -> "S3Action":
        def block(a: BitMatrix, b: BitMatrix) -> BitMatrix:
            rows = a.rows + tuple(r << a.ncols for r in b.rows)
            return BitMatrix(a.nrows + b.nrows, a.ncols + b.ncols, rows)

        return S3Action(
            self.dim + other.dim, block(self.sigma, other.sigma), block(self.tau, other.tau)
        )

    def restrict(self, sub: Subspace) -> "S3Action":
        """Action on an invariant subspace, in coordinates of its RREF basis."""
        basis = sub.vectors
        piv = sub.pivots

        def coords(v: int) -> int:
            c = 0
            for i, (r, p) in enumerate(zip(basis, piv)):
                if (v >> p) & 1:
                    v ^= r
                    c |= 1 << i
            if v:
                raise ValueError("subspace is not invariant")
            return c

        def induced(m: BitMatrix) -> BitMatrix:
            return BitMatrix.from_columns([coords(m.mul_vec(b)) for b in basis], len(basis))

        return S3Action(len(basis), induced(self.sigma), induced(self.tau), self.degree)


# standard small modules

def steinberg() -> S3Action:
    """Basis a, b; sigma: a -> b, b -> a + b; tau swaps a and b."""
    sigma = BitMatrix.from_columns([0b10, 0b11], 2)
    tau = BitMatrix.from_columns([0b10, 0b01], 2)
    return S3Action(2, sigma, tau)


def trivial() -> S3Action:
    return S3Action(1, BitMatrix.identity(1), BitMatrix.identity(1))


def sign_cosets() -> S3Action:
    """F2[S3/A3]: sigma trivial, tau swaps the two cosets."""
    return S3Action(2, BitMatrix.identity(2), BitMatrix.from_columns([0b10, 0b01], 2))


def regular() -> S3Action:
    """F2[S3] acting on itself by left multiplication."""
    elems = list(itertools.permutations(range(3)))
    index = {g: i for i, g in enumerate(elems)}

    def compose(g, h):
        return tuple(g[h[i]] for i in range(3))

    def left(g) -> BitMatrix:
        return BitMatrix.from_columns([1 << index[compose(g, h)] for h in elems], 6)

    return S3Action(6, left((1, 2, 0)), left((1, 0, 2)))


# the action on A_2

def sigma_map() -> AlgebraMap:
    y, x, xp = Element.y, Element.x, Element.xp
    return AlgebraMap(
        2, 2,
        (y(2, 2), y(2, 1) + y(2, 2)),
        (x(2, 2), x(2, 1) + x(2, 2)),
        (xp(2, 2), xp(2, 1) + xp(2, 2)),
    )


def tau_map() -> AlgebraMap:
    y, x, xp = Element.y, Element.x, Element.xp
    return AlgebraMap(
        2, 2,
        (y(2, 2), y(2, 1)),
        (x(2, 2), x(2, 1)),
        (xp(2, 2), xp(2, 1)),
    )


def _map_matrix(f: AlgebraMap, d: int, exterior: bool) -> BitMatrix:
    codes = basis_codes(2, d, exterior)
    cols = [to_vector(f(Element(2, frozenset({c}))), d, exterior) for c in codes]
    return BitMatrix.from_columns(cols, len(codes))


@lru_cache(maxsize=None)
def diagonal_action(d: int, exterior: bool = True) -> S3Action:
    """sigma_* and tau_* on A_2 in degree d (on F2[y1, y2] if not ``exterior``)."""
    if d < 0:
        raise ValueError("negative degree")
    dim = len(basis_codes(2, d, exterior))
    return S3Action(dim, _map_matrix(sigma_map(), d, exterior), _map_matrix(tau_map(), d, exterior), d)


def act(m: BitMatrix, e: Element, d: int, exterior: bool = True) -> Element:
    return from_vector(e.n, d, m.mul_vec(to_vector(e, d, exterior)), exterior)


# Hom(St, M), the idempotent, invariants

def hom_from_st(act_: S3Action) -> Subspace:
    """Equivariant maps St -> M as pairs ``u | v << dim`` with f(a) = u, f(b) = v.

    Conditions: v = tau u, v = sigma u, u + v = sigma v.
    """
    n = act_.dim
    s, t = act_.sigma, act_.tau
    cols = []
    for k in range(2 * n):
        u, v = (1 << k, 0) if k < n else (0, 1 << (k - n))
        r1 = t.mul_vec(u) ^ v
        r2 = s.mul_vec(u) ^ v
        r3 = u ^ v ^ s.mul_vec(v)
        cols.append(r1 | (r2 << n) | (r3 << 2 * n))
    return kernel_basis(BitMatrix.from_columns(cols, 3 * n))


def split_pair(pair: int, dim: int) -> tuple[int, int]:
    return pair & ((1 << dim) - 1), pair >> dim


def idempotent(act_: S3Action) -> BitMatrix:
    """e = 1 + sigma + sigma^2, central and idempotent in F2[S3]."""
    s = act_.sigma
    return BitMatrix.identity(act_.dim) + s + s @ s


def idempotent_split(act_: S3Action) -> tuple[Subspace, Subspace]:
    e = idempotent(act_)
    im, ker = image(e), kernel_basis(e)
    if im.dim + ker.dim != act_.dim or intersect(im, ker).dim:
        raise ArithmeticError("image and kernel of e do not split the module")
    return im, ker


class NotProjectiveError(ValueError):
    pass


def count_projective_summands(act_: S3Action) -> tuple[int, int]:
    """``(copies of St, copies of F2[S3/A3])`` in a projective module."""
    im, ker = idempotent_split(act_)
    if im.dim % 2 or ker.dim % 2:
        raise NotProjectiveError(
            f"not projective of expected shape: dim im(e) = {im.dim}, dim ker(e) = {ker.dim}"
        )
    return ker.dim // 2, im.dim // 2


def invariants(act_: S3Action, subgroup: str = "S3") -> Subspace:
    """Fixed vectors of ``A3`` (= <sigma>, also ``sigma-cyclic``) or ``S3``."""
    one = BitMatrix.identity(act_.dim)
    gens = {"A3": [act_.sigma], "sigma-cyclic": [act_.sigma], "S3": [act_.sigma, act_.tau]}
    if subgroup not in gens:
        raise ValueError(f"unknown subgroup {subgroup!r}")
    stacked = BitMatrix.zeros(0, act_.dim)
    for g in gens[subgroup]:
        stacked = stacked.vstack(g + one)
    return kernel_basis(stacked)


def is_steinberg(act_: S3Action) -> bool:
    """A 2-dimensional module with no sigma-fixed vector and e = 0 is St."""
    return (
        act_.dim == 2
        and invariants(act_, "A3").dim == 0
        and rank(idempotent(act_)) == 0
        and act_.satisfies_relations()
    )


def is_sign_cosets(act_: S3Action) -> bool:
    """F2[S3/A3]: sigma acts trivially and tau has no fixed point besides the sum."""
    return (
        act_.dim == 2
        and act_.sigma == BitMatrix.identity(2)
        and invariants(act_, "S3").dim == 1
        and act_.tau != BitMatrix.identity(2)
    )
