import json

import pytest

from cgsig.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out.strip(), out.err


def test_tl_sig(capsys):
    assert run(capsys, "tl-sig", "--preset", "torus-2-5", "--q", "5", "--k", "1")[:2] == (0, "-2")
    assert run(capsys, "tl-sig", "--preset", "torus-2-5", "--q", "5", "--k", "0")[:2] == (0, "0")
    assert run(capsys, "tl-sig", "--preset", "figure-eight", "--q", "2", "--k", "1")[:2] == (0, "0")
    assert run(capsys, "tl-sig", "--preset", "two-bridge:2", "--q", "5", "--k", "1")[0] == 0
    assert run(capsys, "tl-sig", "--knot", "[[-1,0],[1,-1]]", "--q", "2", "--k", "1")[:2] == (0, "-2")


def test_tl_sig_errors(capsys):
    assert run(capsys, "tl-sig", "--preset", "torus-2-5", "--q", "6", "--k", "1")[0] == 3
    assert run(capsys, "tl-sig", "--preset", "nope", "--q", "5", "--k", "1")[0] == 2


@pytest.mark.parametrize("n1, n2, out", [("1", "2", "1/5"), ("2", "4", "-1/5"), ("3", "1", "-1/5")])
def test_cf_sig(capsys, n1, n2, out):
    assert run(capsys, "cf-sig", "-a", "-2", "-b", "2", "-q", "5", "--n1", n1, "--n2", n2)[:2] == (0, out)


def test_cf_sig_zero(capsys):
    assert run(capsys, "cf-sig", "-a", "-2", "-b", "2", "-q", "5", "--n1", "0", "--n2", "2")[0] == 3


def test_cover_homology(capsys):
    rc, out, _ = run(capsys, "cover-homology", "[[-2,1],[1,2]]")
    data = json.loads(out)
    assert rc == 0 and data["invariant_factors"] == [5]
    assert data["classes_in_first_generator"] == [1, 2]
    rc, _, _ = run(capsys, "cover-homology", "[[1,1],[1,1]]")
    assert rc == 3


def test_gilmer_round_trip(capsys, tmp_path):
    knot = tmp_path / "k.json"
    cert = tmp_path / "c.json"
    assert run(capsys, "make-knot", "--family", "1:0", "-o", str(knot))[0] == 0
    rc, out, _ = run(capsys, "gilmer-check", str(knot), "--g", "1", "--jobs", "1", "--emit-cert", str(cert))
    assert rc == 0 and out == "PROVED g4 > 1 (962 subspaces certified)"
    assert len(json.loads(cert.read_text())["records"]) == 962
    assert run(capsys, "check-cert", str(cert))[:2] == (0, "VALID")
    data = json.loads(cert.read_text())
    data["records"][0]["bound"] = "4"
    cert.write_text(json.dumps(data))
    assert run(capsys, "check-cert", str(cert))[:2] == (1, "INVALID")


def test_gilmer_output_independent_of_jobs(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gilmer-check", "--family", "1:0", "--g", "1", "--jobs", "1", "--emit-cert", str(a))
    run(capsys, "gilmer-check", "--family", "1:0", "--g", "1", "--jobs", "3", "--emit-cert", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_gilmer_inconclusive(capsys):
    rc, out, _ = run(capsys, "gilmer-check", "--family", "1:0", "--unknot-companions", "--g", "1")
    assert rc == 1 and out.startswith("INCONCLUSIVE")


def test_gilmer_errors(capsys, tmp_path):
    assert run(capsys, "gilmer-check", "{oops", "--g", "1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[{\"base\": 3}]")
    assert run(capsys, "gilmer-check", str(bad), "--g", "1")[0] == 2
    two_bridge = tmp_path / "tb.json"
    two_bridge.write_text(json.dumps([{"base": {"seifert": [[2, 1], [0, -2]], "surgery": {"a": -4, "b": 4}},
                                       "infections": []}]))
    assert run(capsys, "gilmer-check", str(two_bridge), "--g", "1")[0] == 4


def test_cg_table(capsys):
    rc, out, _ = run(capsys, "cg-table", "--family", "1:0")
    rows = json.loads(out)
    assert rc == 0 and len(rows) == 625
    assert rows[0] == {"character": [0, 0, 0, 0], "center": "0", "slack": "0"}


def test_paper_verify_example2(capsys, tmp_path):
    rep = tmp_path / "r.json"
    rc, out, _ = run(capsys, "paper-verify", "--section", "example2", "--json", str(rep))
    assert rc == 0 and "7/7 assertions pass" in out
    assert json.loads(rep.read_text())["ok"] is True


def test_paper_verify_deterministic(capsys):
    a = run(capsys, "paper-verify", "--section", "example2")[1]
    b = run(capsys, "paper-verify", "--section", "example2")[1]
    assert a == b
    meta = run(capsys, "paper-verify", "--section", "example2", "--meta")[1]
    assert meta.startswith("# generated")


def test_paper_verify_proposition(capsys):
    rc, out, _ = run(capsys, "paper-verify", "--section", "proposition", "--g", "1", "--k", "0")
    assert rc == 0, out


def test_paper_verify_analytic_reports_printed_form(capsys):
    # the printed closed form disagrees with the direct sum, so this section fails
    rc, out, _ = run(capsys, "paper-verify", "--section", "analytic")
    assert rc == 1
    assert "FAIL  g=1 l=5: (g/3)(2^(2l+3) - 32) - 2l equals the direct sum" in out


def test_paper_verify_corrupted(capsys, monkeypatch):
    import cgsig.verify as v
    monkeypatch.setattr(v, "FIG8_SURGERY", v.HopfSurgery(-2, 3))
    monkeypatch.setattr(v.verify_example_2, "__defaults__", (v.HopfSurgery(-2, 3), 5, True))
    rc, out, _ = run(capsys, "paper-verify", "--section", "example2")
    assert rc == 1
