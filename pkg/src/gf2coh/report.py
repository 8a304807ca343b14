"""Verification suites and their reports.

Expected dimensions are always regenerated from :mod:`gf2coh.series` at run
time; nothing in here hard-codes a dimension table.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Any

from . import membership as mb
from . import quillen as ql
from . import s3rep
from .algebra import Element, basis_codes, symmetrize
from .classes import Variant, chern, quillen_e, verify_psi_phi_composition
from .gf2 import rank
from .series import chi2, chi_a3, chi_s3, verify_chi_decomposition

DEFAULT_SEED = 20240917


@dataclass
class Check:
    claim_id: str
    anchor: str
    passed: bool
    witness: Any = None


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, claim_id: str, anchor: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(claim_id, anchor, bool(passed), witness))

    def extend(self, other: "VerificationReport") -> None:
        self.checks += other.checks
        self.meta.update(other.meta)

    def to_dict(self) -> dict:
        checks = sorted(self.checks, key=lambda c: c.claim_id)
        return {
            "suite": self.suite,
            "passed": self.passed,
            "meta": self.meta,
            "checks": [asdict(c) for c in checks],
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in sorted(self.checks, key=lambda c: c.claim_id):
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.claim_id}: {c.anchor}"
            if not c.passed and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)


# suites


def verify_steinberg() -> VerificationReport:
    rep = VerificationReport("steinberg")
    st, cosets, reg = s3rep.steinberg(), s3rep.sign_cosets(), s3rep.regular()
    cases = {
        "st-tensor-st": (st.tensor(st), (1, 1), "St(x)St = St + F2[S3/A3]"),
        "cosets-tensor-st": (cosets.tensor(st), (2, 0), "F2[S3/A3](x)St = St + St"),
        "regular": (reg, (2, 1), "F2[S3] = St + St + F2[S3/A3]"),
    }
    for key, (mod, expected, anchor) in cases.items():
        got = s3rep.count_projective_summands(mod)
        rep.add(f"steinberg.{key}", anchor, got == expected and mod.satisfies_relations(),
                {"st": got[0], "cosets": got[1]})
    sq = st.tensor(st)
    im, ker = s3rep.idempotent_split(sq)
    rep.add("steinberg.st-tensor-st.summands",
            "Im(e) is F2[S3/A3] and Ker(e) is St for e = 1 + sigma + sigma^2",
            s3rep.is_sign_cosets(sq.restrict(im)) and s3rep.is_steinberg(sq.restrict(ker)),
            {"im": im.dim, "ker": ker.dim})
    rep.add("steinberg.hom-st-st", "Hom(St, St) is 1-dimensional",
            s3rep.hom_from_st(st).dim == 1, s3rep.hom_from_st(st).dim)
    rep.add("steinberg.hom-st-cosets", "Hom(St, F2[S3/A3]) = 0",
            s3rep.hom_from_st(cosets).dim == 0, s3rep.hom_from_st(cosets).dim)
    rep.add("steinberg.hom-st-trivial", "Hom(St, F2) = 0",
            s3rep.hom_from_st(s3rep.trivial()).dim == 0)
    rep.add("steinberg.e-on-st", "e acts as zero on St",
            rank(s3rep.idempotent(st)) == 0)
    return rep


def verify_chi(order: int = 60) -> VerificationReport:
    rep = VerificationReport("chi", meta={"order": order})
    for r in verify_chi_decomposition(order):
        rep.add(f"chi.{r['identity']}", f"{r['lhs']} == {r['rhs']}", r["passed"],
                None if r["passed"] else {"difference": r["difference_numerator"],
                                          "first_mismatch": r["first_mismatch"]})
    return rep


def verify_lim(max_degree: int = ql.DEFAULT_MAX_DEGREE) -> VerificationReport:
    rep = VerificationReport("lim", meta={"max_degree": max_degree})
    chi2_c = chi2().expand(max_degree)
    a3_c, s3_c = chi_a3().expand(max_degree), chi_s3().expand(max_degree)
    hom_dims, lims, lim1s = [], [], []
    bad_hom, bad_lim, bad_routes, bad_indep, bad_euler, bad_inv = [], [], [], [], [], []
    for d in range(max_degree + 1):
        r = ql.lim_degree(d)
        hom_dims.append(r.hom_dim)
        lims.append(r.lim_dim)
        lim1s.append(r.lim1_dim)
        if r.hom_dim != chi2_c[d]:
            bad_hom.append(d)
        if (r.lim_dim, r.lim1_dim) != (r.expected_lim_dim, r.expected_lim1_dim):
            bad_lim.append(d)
        if not r.routes_agree:
            bad_routes.append(d)
        if not ql.fe1_basis(d).is_independent():
            bad_indep.append(d)
        if not ql.euler_check(d):
            bad_euler.append(d)
        poly_act = s3rep.diagonal_action(d, exterior=False)
        if (s3rep.invariants(poly_act, "A3").dim, s3rep.invariants(poly_act, "S3").dim) != (
            a3_c[d], s3_c[d]
        ):
            bad_inv.append(d)
    rep.meta.update({"hom_dims": hom_dims, "lim_dims": lims, "lim1_dims": lim1s})
    rep.add("lim.chi2-hom-dims", "dim Hom(St, A_2)_d equals the chi2 coefficients", not bad_hom,
            bad_hom or None)
    rep.add("lim.dimensions", "lim = chi0 and lim^1 = 2t^3 + t^6 degreewise", not bad_lim,
            bad_lim or None)
    rep.add("lim.two-routes", "ker(phi) equals image(alpha) meet sigma-invariants", not bad_routes,
            bad_routes or None)
    rep.add("lim.restriction-injective", "F(E_1) restricts injectively to A_2", not bad_indep,
            bad_indep or None)
    rep.add("lim.euler", "chi0 + chi2 = chi1 + lim^1 with computed dimensions", not bad_euler,
            bad_euler or None)
    rep.add("lim.invariant-rings", "A3- and S3-invariants of F2[y1, y2] match their series",
            not bad_inv, bad_inv or None)
    for g in ql.verify_generators():
        rep.add(f"lim.generator.{g['class']}", f"{g['class']} = {g['expansion']}", g["passed"],
                None if g["passed"] else g)
    sub = ql.verify_lim_equals_subalgebra(max(max_degree, 6))
    bad = [r for r in sub if not r["passed"]]
    rep.add("lim.equals-subalgebra", "lim is spanned by monomials in b2, b3, d3, d3', d5, d5'",
            not bad, [(r["degree"], r["witness"]) for r in bad] or None)
    for d in (3, 6):
        r = sub[d]
        rep.add(f"lim.equals-subalgebra.degree-{d}", f"no extra limit classes in degree {d}",
                r["passed"], r["witness"])
    return rep


def verify_classes(n_max: int = 5) -> VerificationReport:
    rep = VerificationReport("classes", meta={"n": n_max})
    for r in verify_psi_phi_composition():
        rep.add(f"classes.psi-phi.{r['source']}", f"{r['source']} -> {r['target']}", r["passed"],
                None if r["passed"] else r)
    bad_inv, bad_formula = [], []
    for n in range(1, n_max + 1):
        swaps = [tuple(p) for p in _transpositions(n)]
        for k in range(1, n + 1):
            for v in (Variant.PLAIN, Variant.PRIMED, Variant.PRIMED_REPLACED):
                e = quillen_e(n, k, v)
                if any(e.permuted(p) != e for p in swaps):
                    bad_inv.append((n, k, v.value))
            lead = Element.one(n)
            for i in range(1, k):
                lead = lead * Element.y(n, i)
            if quillen_e(n, k) != symmetrize(lead * Element.x(n, k)):
                bad_formula.append((n, k))
        for i in range(1, n + 1):
            if any(chern(n, i).permuted(p) != chern(n, i) for p in swaps):
                bad_inv.append((n, f"c{i}"))
    rep.add("classes.invariance", "c_i and e-classes are S_n-invariant", not bad_inv,
            bad_inv or None)
    rep.add("classes.e-formula", "e_{2k-1} is the orbit sum of y_1...y_{k-1}x_k",
            not bad_formula, bad_formula or None)
    bad_indep = []
    for d in range(13):
        fe1 = ql.fe1_basis(d)
        if not fe1.is_independent():
            bad_indep.append(d)
    rep.add("classes.n2-independence",
            "monomials in c1, c2, e1, e1', e3, e3' are independent in A_2", not bad_indep,
            bad_indep or None)
    return rep


def _transpositions(n: int):
    for i, j in itertools.combinations(range(n), 2):
        p = list(range(n))
        p[i], p[j] = j, i
        yield p


def verify_membership(
    n: int | None = None,
    max_degree: int = 16,
    exhaustive: bool = False,
    seed: int = DEFAULT_SEED,
    samples: int = 10_000,
) -> VerificationReport:
    """Leading terms, alpha round trips, and reduce versus the linear-algebra oracle.

    With ``exhaustive`` (or no ``n``) the exhaustive part covers n <= 3, degree
    <= 12; random sampling then runs at n = 4 (or the given n) up to ``max_degree``.
    """
    rep = VerificationReport(
        "membership", meta={"seed": seed, "max_degree": max_degree, "samples": samples}
    )
    rng = random.Random(seed)
    if exhaustive or n is None:
        rep.extend(_membership_exhaustive(range(1, 4), 12))
    if not exhaustive:
        rep.extend(_membership_random(4 if n is None else n, max_degree, samples, rng))
    return rep


def _membership_exhaustive(ns, max_degree: int) -> VerificationReport:
    rep = VerificationReport("membership")
    bad_lead, bad_round, bad_mono, bad_member, collisions = [], [], [], [], []
    total_k = total_x = 0
    for n in ns:
        for d in range(max_degree + 1):
            seen: dict = {}
            for K in mb.enumerate_T(n, d):
                total_k += 1
                I = mb.alpha(K)
                if mb.leading_sequence(mb.c_monomial(K)) != I:
                    bad_lead.append(str(K))
                if not mb.in_image_alpha(I) or mb.alpha_inverse(I) != K:
                    bad_round.append(str(K))
                if I in seen:
                    collisions.append((str(K), str(seen[I])))
                seen[I] = K
                cert, rem = mb.reduce(mb.c_monomial(K))
                if rem or not mb.membership_oracle(mb.c_monomial(K)):
                    bad_member.append(str(K))
            for c in basis_codes(n, d):
                x = Element(n, frozenset({c}))
                total_x += 1
                if mb.is_member(x) != mb.membership_oracle(x):
                    bad_mono.append(str(x))
    top = f"n <= {max(ns)}, degree <= {max_degree}"
    rep.add("membership.exhaustive.leading-term", f"leading_sequence(c^K) = alpha(K), {top}",
            not bad_lead, bad_lead[:5] or None)
    rep.add("membership.exhaustive.alpha-roundtrip", f"alpha_inverse(alpha(K)) = K, {top}",
            not bad_round, bad_round[:5] or None)
    rep.add("membership.exhaustive.alpha-injective", f"alpha is injective, {top}",
            not collisions, collisions[:5] or None)
    rep.add("membership.exhaustive.reduce-vs-oracle",
            f"reduce and the oracle agree on every monomial, {top}", not bad_mono,
            bad_mono[:5] or None)
    rep.add("membership.exhaustive.c-monomials-members",
            f"every c^K reduces to zero and passes the oracle, {top}", not bad_member,
            bad_member[:5] or None)
    rep.meta.update({"exhaustive_K": total_k, "exhaustive_monomials": total_x})
    return rep


def _membership_random(n: int, max_degree: int, samples: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("membership")
    bad_lead, bad_round, bad_agree, bad_cert = [], [], [], []
    members = 0
    for _ in range(samples):
        K = mb.random_T(n, max_degree, rng)
        I = mb.alpha(K)
        if mb.leading_sequence(mb.c_monomial(K)) != I:
            bad_lead.append(str(K))
        if mb.alpha_inverse(I) != K:
            bad_round.append(str(K))
        d = rng.randint(0, max_degree)
        x = mb.random_element(n, d, rng)
        cert, rem = mb.reduce(x)
        member = not rem
        members += member
        if member != mb.membership_oracle(x):
            bad_agree.append(str(x))
        total = Element.zero(n)
        for k in cert:
            total = total + mb.c_monomial(k)
        if total + rem != x:
            bad_cert.append(str(x))
    tag = f"n = {n}, degree <= {max_degree}, {samples} samples"
    rep.add("membership.random.leading-term", f"leading_sequence(c^K) = alpha(K), {tag}",
            not bad_lead, bad_lead[:5] or None)
    rep.add("membership.random.alpha-roundtrip", f"alpha_inverse(alpha(K)) = K, {tag}",
            not bad_round, bad_round[:5] or None)
    rep.add("membership.random.reduce-vs-oracle", f"reduce agrees with the oracle, {tag}",
            not bad_agree, bad_agree[:5] or None)
    rep.add("membership.random.certificate", f"x = sum of c^K + remainder, {tag}",
            not bad_cert, bad_cert[:5] or None)
    rep.meta.update({"random_members": members, "random_n": n})
    return rep


def report_xs_series(max_degree: int = ql.DEFAULT_MAX_DEGREE) -> VerificationReport:
    rows = ql.xs_borel_series(max_degree)
    dims = [r["dim"] for r in rows]
    expected = ql.expected_xs_dims(max_degree)
    extra = ql.suspension_classes(rows)
    rep = VerificationReport(
        "xs-series",
        meta={"max_degree": max_degree, "rows": rows, "dims": dims, "suspension_degrees": extra},
    )
    rep.add("xs.dimensions", "dim H^n(X_s) = lim_n + lim^1_{n-1}, against the series",
            dims == expected, None if dims == expected else {"computed": dims, "expected": expected})
    want = [d for d in (4, 4, 7) if d <= max_degree]
    rep.add("xs.suspension-classes", "extra classes sit in degrees 4, 4, 7", extra == want, extra)
    return rep


def verify_all(max_degree: int = ql.DEFAULT_MAX_DEGREE, order: int = 60,
               seed: int = DEFAULT_SEED, samples: int = 10_000) -> VerificationReport:
    rep = VerificationReport("all", meta={"seed": seed})
    for sub in (
        verify_steinberg(),
        verify_chi(order),
        verify_lim(max_degree),
        verify_classes(),
        verify_membership(seed=seed, samples=samples),
        report_xs_series(max_degree),
    ):
        rep.extend(sub)
    rep.meta.pop("rows", None)
    return rep

