"""Exit criteria. Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""
import json
import time
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime

from cgsig.algebra.ffield import Subspace, annihilator
from cgsig.algebra.hermitian import hermitian_signature_at_root
from cgsig.algebra.intmatrix import block_diag, det, matmul, smith_normal_form
from cgsig.cli import main
from cgsig.gilmer import Inconclusive, ObstructionInstance, prove_genus_exceeds
from cgsig.knots import (UNKNOT, FamilySpec, HopfSurgery, build_family, build_K_of_J,
                         torus_2_5, two_bridge_base)
from cgsig.signatures import (SignatureEstimate, base_cg_estimate, cf_hopf_signature,
                              satellite_cg_estimate, tristram_levine)
from cgsig.verify import analytic_lower_bound

from oracles import numeric_hermitian_signature

FIG8 = HopfSurgery(-2, 2)
T25 = torus_2_5()


def cli(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out.strip()


@pytest.mark.criterion(1, "cf-sig reproduces 1/5 and -1/5 exactly, < 1 ms")
def test_criterion_1_cf_sig(capsys):
    assert cli(capsys, "cf-sig", "-a", "-2", "-b", "2", "-q", "5", "--n1", "1", "--n2", "2") == (0, "1/5")
    assert cli(capsys, "cf-sig", "-a", "-2", "-b", "2", "-q", "5", "--n1", "2", "--n2", "4") == (0, "-1/5")
    cf_hopf_signature(FIG8, 5, 1, 2)  # warm the prime check
    for n, expected in (((1, 2), Fraction(1, 5)), ((2, 4), Fraction(-1, 5))):
        t0 = time.perf_counter()
        val = cf_hopf_signature(FIG8, 5, *n)
        elapsed = time.perf_counter() - t0
        assert val == expected
        assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


@pytest.mark.criterion(2, "cover-homology: Z/5 with [eta1]=2[eta2]; Z/(4a^2+1) for a=1..5")
def test_criterion_2_cover_homology(capsys):
    rc, out = cli(capsys, "cover-homology", "[[-2,1],[1,2]]")
    data = json.loads(out)
    assert rc == 0 and data["invariant_factors"] == [5]
    # generators are (eta2, eta1) in row order: eta1 = 2 * eta2
    assert data["classes_in_first_generator"] == [1, 2]
    for a in range(1, 6):
        rc, out = cli(capsys, "cover-homology", json.dumps([[2 * a, 1], [1, -2 * a]]))
        assert rc == 0 and json.loads(out)["invariant_factors"] == [4 * a * a + 1]


@pytest.mark.criterion(3, "T(2,5) Tristram-Levine values and aggregates, numeric oracle agrees")
def test_criterion_3_tristram_levine():
    per_copy = [tristram_levine(T25, 1, 5, k) for k in range(1, 5)]
    assert per_copy == [-2, -4, -4, -2]
    for k in range(1, 5):
        assert numeric_hermitian_signature(T25.matrix, 5, k) == per_copy[k - 1]
    for i in range(1, 7):
        for g in range(1, 4):
            m = 2 ** (2 * i + 1) * g
            assert tristram_levine(T25, m, 5, 1) == tristram_levine(T25, m, 5, 4) == -2 ** (2 * i + 2) * g
            assert tristram_levine(T25, m, 5, 2) == tristram_levine(T25, m, 5, 3) == -2 ** (2 * i + 3) * g


@pytest.mark.criterion(4, "satellite signature envelope for i <= 4, g <= 2, all nontrivial characters")
def test_criterion_4_envelope():
    for i in range(1, 5):
        for g in (1, 2):
            K = build_K_of_J(T25, 2 ** (2 * i + 1) * g)
            for rho in range(1, 5):
                e = satellite_cg_estimate(K, rho)
                assert e.magnitude_lower_bound() >= 2 ** (2 * i + 3) * g - 2
                assert e.magnitude_upper_bound() <= 2 ** (2 * i + 3) * g + 2


@pytest.mark.criterion(5, "g=1, k=[0]: certificate proving g4 > 1 over 962 subspaces, < 60 s, re-validated")
def test_criterion_5_desk_scale(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    t0 = time.perf_counter()
    rc, out = cli(capsys, "gilmer-check", "--family", "1:0", "--g", "1", "--emit-cert", str(cert))
    elapsed = time.perf_counter() - t0
    assert rc == 0 and out.startswith("PROVED g4 > 1")
    assert elapsed < 60
    data = json.loads(cert.read_text())
    assert len(data["records"]) == 962
    assert sum(len(r["subspace_basis"]) == 2 for r in data["records"]) == 806
    assert sum(len(r["subspace_basis"]) == 3 for r in data["records"]) == 156
    assert all(Fraction(r["center"]).__abs__() - Fraction(r["slack"]) > 4 for r in data["records"])
    assert cli(capsys, "check-cert", str(cert)) == (0, "VALID")


@pytest.mark.criterion(6, "analytic chain: both closed forms of the lower bound agree and the strict chain holds")
def test_criterion_6_analytic_chain():
    disagreements = []
    for g in range(1, 4):
        for ell in range(2 * g + 3, 2 * g + 9):
            r = analytic_lower_bound(g, ell)
            star = r.star
            assert r.sum_form_matches
            assert star > 2 ** (2 * ell) - 2 * ell > 2 * ell > 4 * g + 4
            assert r.chain_holds
            if r.printed_form != star:
                disagreements.append((g, ell, star, r.printed_form))
    assert not disagreements, (
        "(g/3)(2^(2l+3) - 32) - 2l differs from 8g(2^(2l) - sum 2^(2k)) - 2l: "
        + "; ".join(f"g={g} l={l}: {s} vs {p}" for g, l, s, p in disagreements[:4]))


# --- criterion 7: property suites, 200 cases each -------------------------

P200 = settings(max_examples=200, deadline=None)
small = st.integers(-5, 5)


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m))))
def test_criterion_7_snf(A):
    D, U, W = smith_normal_form(A)
    assert matmul(matmul(U, A), W) == D
    assert abs(det(U)) == 1 and abs(det(W)) == 1
    d = [D[i][i] for i in range(min(len(A), len(A[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all((b == 0) if a == 0 else b % a == 0 for a, b in zip(d, d[1:]))


seifert2 = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2)


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(seifert2, seifert2, st.sampled_from([3, 5, 7]), st.integers(1, 6))
def test_criterion_7_hermitian(V, W, q, k):
    k = k % q or 1
    s = hermitian_signature_at_root(V, q, k)
    assert s == hermitian_signature_at_root(V, q, q - k)
    assert hermitian_signature_at_root(block_diag(V, W), q, k) == s + hermitian_signature_at_root(W, q, k)


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), max_size=4))
def test_criterion_7_annihilator(vs):
    S = Subspace.span(vs, 4, 5)
    assert annihilator(annihilator(S)) == S
    assert S.dim + annihilator(S).dim == 4


rat = st.fractions(min_value=-500, max_value=500, max_denominator=30)


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(rat, rat.map(abs), rat, rat.map(abs), st.fractions(0, 1), st.fractions(0, 1))
def test_criterion_7_estimate_containment(c1, s1, c2, s2, t1, t2):
    x, y = SignatureEstimate(c1, s1), SignatureEstimate(c2, s2)
    a, b = x.lo + t1 * (x.hi - x.lo), y.lo + t2 * (y.hi - y.lo)
    assert (x + y).contains(a + b) and (-x).contains(-a)


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(st.integers(-30, 30), st.integers(-30, 30), st.sampled_from([2, 3, 5, 7, 11, 13, 17]),
       st.integers(1, 16), st.integers(1, 16))
def test_criterion_7_cf_conjugation(a, b, q, n1, n2):
    if a * b == 1 or n1 % q == 0 or n2 % q == 0:
        return
    S = HopfSurgery(a, b)
    assert cf_hopf_signature(S, q, n1, n2) == cf_hopf_signature(S, q, q - n1 % q, q - n2 % q)


AMPHI = [(a, 4 * a * a + 1) for a in range(1, 11) if isprime(4 * a * a + 1)]


@pytest.mark.criterion(7, "property suites (>= 200 random cases each)")
@P200
@given(st.sampled_from(AMPHI), st.integers(1, 400))
def test_criterion_7_amphichiral_antisymmetry(case, c):
    a, q = case
    c = c % q or 1
    S = two_bridge_base(a)[1]
    assert base_cg_estimate(S, q, 2 * a * c).center == -base_cg_estimate(S, q, c).center
    if a == 1:
        assert cf_hopf_signature(FIG8, 5, 2 * c, 4 * c) == -cf_hopf_signature(FIG8, 5, c, 2 * c)


@pytest.mark.criterion(8, "unknot companions: gilmer-check inconclusive for every g >= 1")
@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_criterion_8_negative_control(capsys, g):
    inst = ObstructionInstance(build_family(FamilySpec(g, (0,)), companion=UNKNOT), g)
    assert isinstance(prove_genus_exceeds(inst), Inconclusive)
    rc, out = cli(capsys, "gilmer-check", "--family", f"{g}:0", "--unknot-companions", "--g", str(g))
    assert rc == 1 and out.startswith("INCONCLUSIVE")
