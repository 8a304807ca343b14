"""lim and lim^1 of E -> H^*(C(E); F2) over the two-object Quillen category.

F(E_1) = F2[c1, c2] (x) E(e1, e1', e3, e3') is held through its (injective)
restriction to F(E_2) = A_2, which makes ``alpha_*`` an inclusion.  In each
degree ``d``

    0 -> lim_d -> F(E_1)_d --phi--> Hom_{F2[S3]}(St, A_2)_d -> lim^1_d -> 0,

with ``phi(x) = (alpha x + sigma^2 alpha x, alpha x + sigma alpha x)`` as the
images of the Steinberg basis vectors a and b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Element, basis_codes, from_vector, to_vector
from .classes import Variant, chern, quillen_e
from .gf2 import BitMatrix, Subspace, intersect, kernel_basis, rank
from .grammar import parse
from .s3rep import diagonal_action, hom_from_st, invariants, split_pair
from .series import chi0, chi1, chi2, lim1_series

DEFAULT_MAX_DEGREE = 24

# generators of F(E_1) with their degrees, in the order used for monomials
_FE1_GENERATORS = ("c1", "c2", "e1", "e1p", "e3", "e3p")


@lru_cache(maxsize=None)
def _fe1_generator(name: str) -> Element:
    return {
        "c1": lambda: chern(2, 1),
        "c2": lambda: chern(2, 2),
        "e1": lambda: quillen_e(2, 1, Variant.PLAIN),
        "e1p": lambda: quillen_e(2, 1, Variant.PRIMED),
        "e3": lambda: quillen_e(2, 2, Variant.PLAIN),
        "e3p": lambda: quillen_e(2, 2, Variant.PRIMED),
    }[name]()


@dataclass(frozen=True)
class FE1Basis:
    degree: int
    labels: tuple[str, ...]
    images: tuple[int, ...]  # bit-vectors in A_2 of this degree

    @property
    def dim(self) -> int:
        return len(self.labels)

    def is_independent(self) -> bool:
        return rank(BitMatrix.from_rows(self.images, len(basis_codes(2, self.degree)))) == self.dim


def _label(k1: int, k2: int, ext: tuple[str, ...]) -> str:
    parts = []
    for name, k in (("c1", k1), ("c2", k2)):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    parts += [e.replace("p", "'") for e in ext]
    return "*".join(parts) or "1"


@lru_cache(maxsize=None)
def fe1_basis(d: int) -> FE1Basis:
    """Monomials c1^k1 c2^k2 e^S of degree d and their restrictions to A_2."""
    labels, images = [], []
    ext_names = _FE1_GENERATORS[2:]
    ext_deg = {"e1": 1, "e1p": 1, "e3": 3, "e3p": 3}
    for r in range(len(ext_names) + 1):
        for ext in itertools.combinations(ext_names, r):
            rest = d - sum(ext_deg[e] for e in ext)
            if rest < 0 or rest % 2:
                continue
            for k2 in range(rest // 4 + 1):
                k1 = (rest - 4 * k2) // 2
                e = chern(2, 1) ** k1 * chern(2, 2) ** k2
                for name in ext:
                    e = e * _fe1_generator(name)
                labels.append(_label(k1, k2, ext))
                images.append(to_vector(e, d) if e else 0)
    return FE1Basis(d, tuple(labels), tuple(images))


def _coords(sub: Subspace, v: int) -> int:
    """Coordinates of ``v`` on the RREF basis of ``sub``."""
    c = 0
    for i, (r, p) in enumerate(zip(sub.vectors, sub.pivots)):
        if (v >> p) & 1:
            v ^= r
            c |= 1 << i
    if v:
        raise ValueError("vector is not in the subspace")
    return c


def phi_pair(w: int, d: int) -> int:
    """``(w + sigma^2 w) | (w + sigma w) << dim`` for w in A_2 of degree d."""
    act_ = diagonal_action(d)
    s = act_.sigma
    sw = s.mul_vec(w)
    u = w ^ s.mul_vec(sw)
    v = w ^ sw
    return u | (v << act_.dim)


@lru_cache(maxsize=None)
def hom_space(d: int) -> Subspace:
    return hom_from_st(diagonal_action(d))


@lru_cache(maxsize=None)
def phi_matrix(d: int) -> BitMatrix:
    """phi in degree d: FE1 coordinates -> coordinates on the Hom(St, A_2) basis."""
    hom = hom_space(d)
    cols = [_coords(hom, phi_pair(w, d)) for w in fe1_basis(d).images]
    return BitMatrix.from_columns(cols, hom.dim)


@dataclass(frozen=True)
class LimReport:
    degree: int
    lim_dim: int
    lim1_dim: int
    lim_basis: Subspace
    expected_lim_dim: int
    expected_lim1_dim: int
    hom_dim: int
    fe1_dim: int
    phi_rank: int
    lim1_representatives: tuple[tuple[Element, Element], ...] = field(default=())
    routes_agree: bool = True

    @property
    def passed(self) -> bool:
        return (
            self.routes_agree
            and self.lim_dim == self.expected_lim_dim
            and self.lim1_dim == self.expected_lim1_dim
        )


def _expected(series, d: int) -> int:
    return series.expand(d)[d]


@lru_cache(maxsize=None)
def lim_degree(d: int) -> LimReport:
    fe1 = fe1_basis(d)
    amb = len(basis_codes(2, d))
    phi = phi_matrix(d)
    hom = hom_space(d)

    # route 1: kernel of phi, pushed into A_2
    ker = kernel_basis(phi)
    lim_vectors = []
    for kv in ker.vectors:
        w = 0
        for i, img in enumerate(fe1.images):
            if (kv >> i) & 1:
                w ^= img
        lim_vectors.append(w)
    lim_basis = Subspace.span(lim_vectors, amb)

    # route 2: image(alpha) meets the sigma-invariants
    alpha_image = Subspace.span(fe1.images, amb)
    fixed = invariants(diagonal_action(d), "sigma-cyclic")
    inter = intersect(alpha_image, fixed)

    r = rank(phi)
    image_phi = Subspace.span(phi.columns(), hom.dim)
    reps = []
    ext = image_phi
    for i in range(hom.dim):
        if (1 << i) not in ext:
            ext = ext + Subspace.span([1 << i], hom.dim)
            u, v = split_pair(hom.vectors[i], diagonal_action(d).dim)
            reps.append((from_vector(2, d, u), from_vector(2, d, v)))

    return LimReport(
        degree=d,
        lim_dim=ker.dim,
        lim1_dim=hom.dim - r,
        lim_basis=lim_basis,
        expected_lim_dim=_expected(chi0(), d),
        expected_lim1_dim=_expected(lim1_series(), d),
        hom_dim=hom.dim,
        fe1_dim=fe1.dim,
        phi_rank=r,
        lim1_representatives=tuple(reps),
        routes_agree=(lim_basis == inter and ker.dim == inter.dim),
    )


# the six generators of the limit, written out in y/x form


def lots_table() -> dict[str, tuple[Element, Element]]:
    """Each generator as (unexpanded form, expanded form) in A_2."""
    p = lambda s: parse(s, 2)  # noqa: E731
    y1, y2 = p("y1"), p("y2")
    x1, x2, xp1, xp2 = p("x1"), p("x2"), p("xp1"), p("xp2")
    d3 = y1 * x2 + y2 * x1
    d3p = y1 * (x2 + xp2) + y2 * (x1 + xp1)
    return {
        "b2": (y1 * y1 + y1 * y2 + y2 * y2, p("y1^2+y1*y2+y2^2")),
        "b3": (y1 * y2 * (y1 + y2), p("y1^2*y2+y1*y2^2")),
        "d3": (d3, p("y1*x2+y2*x1")),
        "d3p": (d3p, p("y1*x2+y1*xp2+y2*x1+y2*xp1")),
        "d5": ((y1 + y2) * d3 + y1 * y2 * (x1 + x2), p("y1^2*x2+y2^2*x1")),
        "d5p": (
            (y1 + y2) * d3p + y1 * y2 * (x1 + xp1 + x2 + xp2),
            p("y1^2*x2+y1^2*xp2+y2^2*x1+y2^2*xp1"),
        ),
    }


def _via_restriction() -> dict[str, Element]:
    """c1^2 + c2, c1 c2, e3, e3', c1 e3 + c2 e1, c1 e3' + c2 e1' restricted to A_2."""
    g = _fe1_generator
    return {
        "b2": g("c1") ** 2 + g("c2"),
        "b3": g("c1") * g("c2"),
        "d3": g("e3"),
        "d3p": g("e3p"),
        "d5": g("c1") * g("e3") + g("c2") * g("e1"),
        "d5p": g("c1") * g("e3p") + g("c2") * g("e1p"),
    }


def verify_generators() -> list[dict]:
    table = lots_table()
    restricted = _via_restriction()
    out = []
    for name, (raw, expanded) in table.items():
        d = expanded.degree()
        sig = diagonal_action(d).sigma
        v = to_vector(expanded, d)
        out.append(
            {
                "class": name,
                "degree": d,
                "expansion": str(expanded),
                "expansion_matches_product_form": raw == expanded,
                "matches_restriction": restricted[name] == expanded,
                "sigma_invariant": sig.mul_vec(v) == v,
                "passed": raw == expanded and restricted[name] == expanded and sig.mul_vec(v) == v,
            }
        )
    return out


@lru_cache(maxsize=None)
def subalgebra_span(d: int) -> Subspace:
    """Span in A_2 of degree-d monomials in b2, b3 and the exterior d-classes."""
    gens = {k: v[1] for k, v in lots_table().items()}
    amb = len(basis_codes(2, d))
    vecs = []
    ext = (("d3", 3), ("d3p", 3), ("d5", 5), ("d5p", 5))
    for r in range(5):
        for sub in itertools.combinations(ext, r):
            rest = d - sum(k for _, k in sub)
            if rest < 0 or rest % 2:
                continue
            for j in range(rest // 6 + 1):
                if (rest - 6 * j) % 4:
                    continue
                i = (rest - 6 * j) // 4
                e = gens["b2"] ** i * gens["b3"] ** j
                for name, _ in sub:
                    e = e * gens[name]
                vecs.append(to_vector(e, d) if e else 0)
    return Subspace.span(vecs, amb)


def verify_lim_equals_subalgebra(max_degree: int = DEFAULT_MAX_DEGREE) -> list[dict]:
    if max_degree < 6:
        raise ValueError("max_degree must be at least 6")
    out = []
    for d in range(max_degree + 1):
        lim = lim_degree(d).lim_basis
        sub = subalgebra_span(d)
        witness = None
        if lim != sub:
            bad = next((v for v in lim.vectors if v not in sub), None)
            if bad is None:
                bad = next(v for v in sub.vectors if v not in lim)
            witness = str(from_vector(2, d, bad))
        out.append(
            {
                "degree": d,
                "lim_dim": lim.dim,
                "subalgebra_dim": sub.dim,
                "equal": lim == sub,
                "witness": witness,
                "passed": lim == sub,
            }
        )
    return out


def xs_borel_series(max_degree: int = DEFAULT_MAX_DEGREE) -> list[dict]:
    """dim H^n of the 2-singular locus: lim in degree n plus lim^1 in degree n - 1."""
    rows = []
    for n in range(max_degree + 1):
        lim = lim_degree(n).lim_dim
        lim1 = lim_degree(n - 1).lim1_dim if n >= 1 else 0
        rows.append({"degree": n, "lim": lim, "lim1_shifted": lim1, "dim": lim + lim1})
    return rows


def suspension_classes(rows: list[dict]) -> list[int]:
    """Degrees of the lim^1 contributions, with multiplicity."""
    out = []
    for r in rows:
        out += [r["degree"]] * r["lim1_shifted"]
    return out


def expected_xs_dims(max_degree: int) -> list[int]:
    lim = chi0().expand(max_degree)
    lim1 = lim1_series().expand(max_degree)
    return [lim[n] + (lim1[n - 1] if n else 0) for n in range(max_degree + 1)]


def euler_check(d: int) -> bool:
    """chi0 + chi2 = chi1 + lim^1 in degree d, with the computed dimensions."""
    rep = lim_degree(d)
    return rep.lim_dim + rep.hom_dim == rep.fe1_dim + rep.lim1_dim and (
        _expected(chi1(), d) == rep.fe1_dim and _expected(chi2(), d) == rep.hom_dim
    )
