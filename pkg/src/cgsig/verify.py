"""End-to-end reproduction of the worked example and the family argument."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .algebra.ffield import Subspace, enumerate_subspaces
from .algebra.intmatrix import block_diag
from .errors import HypothesisViolation, MismatchWithPaper, PreconditionError
from .gilmer import (GenusCertificate, ObstructionInstance, check_certificate,
                     prove_genus_exceeds, universal_witness_check)
from .knots import (UNKNOT, FamilySpec, HopfSurgery, KnotSum, build_family,
                    figure_eight)
from .serialize import format_rational
from .signatures import base_cg_estimate, cf_hopf_signature

FIG8_SURGERY = HopfSurgery(-2, 2)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    section: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        self.data[other.section] = other.data

    def to_text(self) -> str:
        lines = [f"== {self.section} =="]
        for c in self.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
        n = sum(c.passed for c in self.checks)
        lines.append(f"{n}/{len(self.checks)} assertions pass")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"section": self.section, "ok": self.ok,
                "checks": [asdict(c) for c in self.checks], "data": self.data}


def verify_example_2(surgery: HopfSurgery = FIG8_SURGERY, q: int = 5,
                     strict: bool = True) -> Report:
    """Cover homology, the four Hopf-surgery values and the |sigma| < 2 bound."""
    if q != 5:
        raise PreconditionError("the worked example uses Z_5-valued characters")
    rep = Report("example2")
    G = surgery.group
    try:
        classes = surgery.meridian_classes()
    except PreconditionError:
        classes = None
    group_ok = rep.add("H1(Sigma_2(K0)) = Z/5 with [eta1] = 2[eta2]",
                       G.invariant_factors == (5,) and classes == (1, 2),
                       f"group {G}, meridian classes {classes}")
    if group_ok:
        sig = {j: (base_cg_estimate(surgery, q, j).center if j else Fraction(0)) for j in range(5)}
        rep.add("sigma(Sigma_2(K0), chi_1) = 1/5", sig[1] == Fraction(1, 5), format_rational(sig[1]))
        rep.add("sigma(Sigma_2(K0), chi_2) = -1/5", sig[2] == Fraction(-1, 5), format_rational(sig[2]))
        rep.add("sigma(chi_3) = sigma(chi_2)", sig[3] == sig[2], format_rational(sig[3]))
        rep.add("sigma(chi_4) = sigma(chi_1)", sig[4] == sig[1], format_rational(sig[4]))
        rep.add("sigma(chi_0) = 0", base_cg_estimate(surgery, q, 0).center == 0)
        ests = [base_cg_estimate(surgery, q, j) for j in range(5)]
        rep.add("|sigma(K0, chi)| < 2 for every chi",
                all(e.magnitude_upper_bound() < 2 for e in ests),
                "max " + format_rational(max(e.magnitude_upper_bound() for e in ests)))
        rep.data = {"cf_values": {str(j): format_rational(v) for j, v in sig.items()}}
    else:
        for name in ("sigma(chi_1)", "sigma(chi_2)", "sigma(chi_3)", "sigma(chi_4)",
                     "sigma(chi_0)", "|sigma(K0, chi)| < 2"):
            rep.add(name, False, "skipped: cover homology mismatch")
    if strict and not rep.ok:
        bad = next(c for c in rep.checks if not c.passed)
        raise MismatchWithPaper(f"{bad.name}: {bad.detail}")
    return rep


@dataclass
class AnalyticBoundReport:
    g: int
    ell: int
    dominant: int
    tail: int
    star: int
    sum_form: int
    printed_form: Fraction
    corrected_form: Fraction
    chain: list
    sum_form_matches: bool
    printed_form_matches: bool
    corrected_form_matches: bool
    chain_holds: bool
    printed_chain_holds: bool

    @property
    def all_hold(self) -> bool:
        return (self.sum_form_matches and self.printed_form_matches
                and self.corrected_form_matches and self.chain_holds)


def analytic_lower_bound(g: int, ell: int) -> AnalyticBoundReport:
    """Dominant summand minus the worst-case tail, in exact integers.

    Records whether the two closed forms printed alongside the argument
    agree with the direct sum; the second printed form does not (the
    geometric sum was mis-simplified), and the corrected form is kept next
    to it. The concluding chain is checked for both.
    """
    if g < 1 or ell <= 2 * g + 2:
        raise HypothesisViolation(f"need l > 2g + 2 >= 4 (got g={g}, l={ell})")
    dominant = 2 ** (2 * ell + 3) * g - 2
    tail = sum(2 ** (2 * k + 3) * g + 2 for k in range(1, ell))
    star = dominant - tail
    sum_form = 8 * g * (2 ** (2 * ell) - sum(2 ** (2 * k) for k in range(1, ell))) - 2 * ell
    printed = Fraction(g, 3) * (2 ** (2 * ell + 3) - 32) - 2 * ell
    corrected = Fraction(g, 3) * (2 ** (2 * ell + 4) + 32) - 2 * ell
    links = [Fraction(g, 3) * 2 ** (2 * ell + 2) - 2 * ell,
             Fraction(2 ** (2 * ell) - 2 * ell),
             Fraction(2 * ell), Fraction(4 * g + 4), Fraction(4 * g)]
    tail_chain = all(a > b for a, b in zip(links, links[1:]))
    return AnalyticBoundReport(
        g, ell, dominant, tail, star, sum_form, printed, corrected,
        [star] + links,
        sum_form == star, printed == star, corrected == star,
        star > links[0] and tail_chain,
        printed > links[0] and tail_chain,
    )


def f_increasing(x: int) -> bool:
    """Discrete form of ``f(x) = 2^{2x} - 4x`` increasing, with ``f(2) = 8``."""
    return (2 ** (2 * (x + 1)) - 4 * (x + 1)) > (2 ** (2 * x) - 4 * x)


def verify_analytic(gs=range(1, 4), offsets=range(3, 9)) -> Report:
    rep = Report("analytic")
    rows = []
    for g in gs:
        for off in offsets:
            ell = 2 * g + off
            r = analytic_lower_bound(g, ell)
            rep.add(f"g={g} l={ell}: 8g(...) - 2l equals the direct sum", r.sum_form_matches, str(r.star))
            rep.add(f"g={g} l={ell}: (g/3)(2^(2l+3) - 32) - 2l equals the direct sum",
                    r.printed_form_matches,
                    f"printed {format_rational(r.printed_form)} vs {r.star}; "
                    f"(g/3)(2^(2l+4) + 32) - 2l = {format_rational(r.corrected_form)}")
            rep.add(f"g={g} l={ell}: (*) > (g/3)2^(2l+2) - 2l > 2^(2l) - 2l > 2l > 4g+4 > 4g",
                    r.chain_holds and r.printed_chain_holds)
            rows.append({"g": g, "l": ell, "star": str(r.star),
                         "printed": format_rational(r.printed_form),
                         "corrected": format_rational(r.corrected_form)})
    rep.add("f(2) = 8 and f(x) = 2^(2x) - 4x increases for 1 <= x <= 64",
            2 ** 4 - 8 == 8 and all(f_increasing(x) for x in range(1, 65)))
    rep.data = {"rows": rows}
    return rep


def analytic_prediction(g: int, ell: int) -> int:
    """Lower bound for a character whose top supported summand index is ``ell``."""
    return (2 ** (2 * ell + 3) * g - 2) - sum(2 ** (2 * k + 3) * g + 2 for k in range(1, ell))


def linking_form(K: KnotSum) -> list[list[Fraction]]:
    """Linking form on the summand generators ``a_j`` (first meridians), mod 1."""
    out = [[Fraction(0)] * len(K) for _ in range(len(K))]
    for j, s in enumerate(K):
        a, b = s.surgery.a, s.surgery.b
        out[j][j] = Fraction(b, a * b - 1) % 1
    return out


def find_metabolizer(K: KnotSum, brute_force_limit: int = 4) -> Subspace | None:
    """Half-dimensional subspace of ``F_5^N`` on which the linking form vanishes.

    Brute force for ``N <= brute_force_limit``; otherwise the paired
    candidate ``a_{2i-1} + c a_{2i}`` is built and checked.
    """
    N = len(K)
    if N % 2:
        return None
    L = linking_form(K)

    def isotropic(S: Subspace):
        return all(sum(L[i][j] * u[i] * v[j] for i in range(N) for j in range(N)) % 1 == 0
                   for u in S.basis for v in S.basis)

    if N <= brute_force_limit:
        return next((S for S in enumerate_subspaces(N, 5, N // 2) if isotropic(S)), None)
    for c in range(1, 5):
        vecs = []
        for i in range(0, N, 2):
            v = [0] * N
            v[i], v[i + 1] = 1, c
            vecs.append(v)
        S = Subspace.span(vecs, N, 5)
        if isotropic(S):
            return S
    return None


def cross_validate(g: int, ks, cap: int = 8, companion=None, jobs: int = 1) -> Report:
    """Exhaustive certificate vs. the analytic tail bound on the same family."""
    spec = FamilySpec(g, tuple(ks))
    N = len(spec.ks) * spec.block
    if N > cap:
        raise PreconditionError(f"N = {N} exceeds cap {cap}")
    K = build_family(spec, companion=companion)
    rep = Report("proposition")
    rep.add("K^k shares the Seifert form of #^(2g+2) figure-eight",
            K.seifert_matrix() == block_diag(*([figure_eight().matrix] * N)))
    M = find_metabolizer(K)
    rep.add("linking form on H1(Sigma_2) has a metabolizer",
            M is not None, "" if M is None else str([list(r) for r in M.basis]))
    inst = ObstructionInstance(K, g)
    result = prove_genus_exceeds(inst, jobs=jobs)
    proved = isinstance(result, GenusCertificate)
    rep.add(f"exhaustive sweep proves g4 > {g}", proved, result.summary())
    rows = []
    if proved:
        idx = spec.site_indices()
        ok = True
        for rec in result.records:
            ell = idx[max(i for i, c in enumerate(rec.witness) if c)]
            pred = analytic_prediction(g, ell)
            ok &= rec.bound >= pred
            rows.append((rec.subspace.dim, ell, rec.bound, pred))
        rep.add("every witness bound >= analytic prediction for its top summand", ok)
        rep.add("every witness bound > 4g", all(r.bound > 4 * g for r in result.records))
        rep.add("certificate re-validates", check_certificate(result.dumps()))
        rep.data = {
            "records": len(result.records),
            "min_bound": format_rational(min(r[2] for r in rows)),
            "min_prediction": str(min(r[3] for r in rows)),
            "by_dim": {str(d): sum(1 for r in rows if r[0] == d) for d in sorted({r[0] for r in rows})},
        }
    return rep


def independence_proxy(g: int = 1) -> Report:
    """All nontrivial sums of the first two generators ``K^0``, ``K^1``.

    Single generators get the full subspace sweep; the double sum is
    too large for that and is settled by checking every character.
    """
    rep = Report("independence")
    for ks in ((0,), (1,)):
        res = prove_genus_exceeds(ObstructionInstance(build_family(FamilySpec(g, ks)), g))
        rep.add(f"K^{ks[0]}: sweep proves g4 > {g}", isinstance(res, GenusCertificate), res.summary())
    inst = ObstructionInstance(build_family(FamilySpec(g, (0, 1))), g)
    ok, low, chi = universal_witness_check(inst)
    rep.add(f"K^0 # K^1: every nonzero character beats 4g (N = {inst.N})", ok,
            f"min bound {format_rational(low)} at {list(chi.coeffs)}")
    return rep


def negative_control(g: int = 1) -> Report:
    rep = Report("control")
    res = prove_genus_exceeds(ObstructionInstance(build_family(FamilySpec(g, (0,)), companion=UNKNOT), g))
    rep.add(f"unknot companions: inconclusive at g={g}", not isinstance(res, GenusCertificate), res.summary())
    return rep


def paper_verify(section: str = "all", g: int = 1, ks=(0,), jobs: int = 1) -> Report:
    if section not in ("example2", "proposition", "analytic", "independence", "all"):
        raise PreconditionError(f"unknown section {section!r}")
    rep = Report(section)
    if section in ("example2", "all"):
        rep.extend(verify_example_2(strict=False))
    if section in ("proposition", "all"):
        rep.extend(cross_validate(g, ks, jobs=jobs))
        rep.extend(negative_control(g))
    if section in ("analytic", "all"):
        rep.extend(verify_analytic())
    if section in ("independence", "all"):
        rep.extend(independence_proxy())
    return rep


def report_json(rep: Report) -> str:
    return json.dumps(rep.to_json(), indent=2, sort_keys=True)
