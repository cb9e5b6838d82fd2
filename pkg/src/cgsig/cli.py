"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition violation, 4 unsupported group.
"""
from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path

from .algebra.intmatrix import group_from_presentation, smith_normal_form
from .errors import CGError, MalformedCertificate
from .gilmer import (GenusCertificate, ObstructionInstance, check_certificate,
                     prove_genus_exceeds)
from .knots import (UNKNOT, FamilySpec, HopfSurgery, SeifertMatrix, build_family,
                    figure_eight, knot_from_json, knot_to_json, torus_2_5,
                    two_bridge_base)
from .serialize import format_rational
from .signatures import cf_hopf_signature, signature_table, table_to_json, tristram_levine
from .verify import paper_verify, report_json


class ParseError(CGError):
    exit_code = 2


def _load_json(src: str):
    """Inline JSON, ``-`` for stdin, or a path to a UTF-8 JSON file."""
    try:
        s = src.lstrip()
        if s.startswith(("[", "{")):
            return json.loads(s)
        text = sys.stdin.read() if src == "-" else Path(src).read_text(encoding="utf-8")
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read JSON from {src!r}: {e}") from e


def _parse_knot(src: str):
    try:
        return knot_from_json(_load_json(src))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, CGError):
            raise
        raise ParseError(f"malformed knot description: {e}") from e


def _preset(name: str) -> SeifertMatrix:
    if name == "figure-eight":
        return figure_eight()
    if name == "torus-2-5":
        return torus_2_5()
    if name.startswith("two-bridge:"):
        try:
            a = int(name.split(":", 1)[1])
        except ValueError as e:
            raise ParseError(f"bad preset {name!r}") from e
        return two_bridge_base(a)[0]
    raise ParseError(f"unknown preset {name!r}")


def _write(out: str | None, text: str):
    if out in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def cmd_tl_sig(args):
    if (args.preset is None) == (args.knot is None):
        raise ParseError("give exactly one of --preset or --knot")
    V = _preset(args.preset) if args.preset else SeifertMatrix.of(_load_json(args.knot))
    _write(args.output, str(tristram_levine(V, args.multiplicity, args.q, args.k)))


def cmd_cover_homology(args):
    A = _load_json(args.matrix)
    if not isinstance(A, list) or any(not isinstance(r, list) for r in A):
        raise ParseError("presentation must be a JSON list of rows")
    D, U, W = smith_normal_form(A)
    G = group_from_presentation(A)
    out = {"invariant_factors": list(G.invariant_factors), "order": G.order,
           "group": str(G), "smith_diagonal": [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))],
           "generator_images": [list(x) for x in G.generator_images]}
    if G.is_cyclic and G.order > 1:
        u = G.generator_images[0][0]
        try:
            inv = pow(u, -1, G.order)
            out["classes_in_first_generator"] = [img[0] * inv % G.order for img in G.generator_images]
        except ValueError:
            pass
    _write(args.output, json.dumps(out, sort_keys=False))


def cmd_cf_sig(args):
    val = cf_hopf_signature(HopfSurgery(args.a, args.b), args.q, args.n1, args.n2)
    _write(args.output, format_rational(val))


def _knot_arg(args):
    if args.family:
        g, _, ks = args.family.partition(":")
        try:
            spec = FamilySpec(int(g), tuple(int(k) for k in ks.split(",") if k))
        except ValueError as e:
            if isinstance(e, CGError):
                raise
            raise ParseError(f"bad --family {args.family!r} (expected g:k1,k2,...)") from e
        return build_family(spec, companion=UNKNOT if args.unknot_companions else None)
    if args.knot is None:
        raise ParseError("give a knot description or --family")
    return _parse_knot(args.knot)


def cmd_make_knot(args):
    _write(args.output, json.dumps(knot_to_json(_knot_arg(args))))


def cmd_cg_table(args):
    K = _knot_arg(args)
    _write(args.output, json.dumps(table_to_json(signature_table(K, args.q))))


def cmd_gilmer_check(args):
    K = _knot_arg(args)
    inst = ObstructionInstance(K, args.g)
    res = prove_genus_exceeds(inst, jobs=args.jobs, max_subspaces=args.max_subspaces)
    if isinstance(res, GenusCertificate) and args.emit_cert:
        _write(args.emit_cert, res.dumps())
    print(res.summary())
    return 0 if isinstance(res, GenusCertificate) else 1


def cmd_check_cert(args):
    data = _load_json(args.cert)
    ok = check_certificate(data)
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def cmd_paper_verify(args):
    ks = tuple(int(k) for k in args.k.split(",")) if args.k else (0,)
    rep = paper_verify(args.section, g=args.g, ks=ks, jobs=args.jobs)
    text = rep.to_text()
    if args.meta:
        text = f"# generated {_dt.datetime.now().isoformat(timespec='seconds')}\n" + text
    print(text)
    if args.json:
        _write(args.json, report_json(rep))
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cgsig", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tl-sig", help="Tristram-Levine signature at exp(2 pi i k/q)")
    s.add_argument("--preset", help="figure-eight | torus-2-5 | two-bridge:A")
    s.add_argument("--knot", help="Seifert matrix as JSON (inline or file)")
    s.add_argument("--q", "-q", type=int, required=True)
    s.add_argument("--k", "-k", type=int, required=True)
    s.add_argument("--multiplicity", "-m", type=int, default=1)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_tl_sig)

    s = sub.add_parser("cover-homology", help="invariant factors of a presentation matrix")
    s.add_argument("matrix", help="relation matrix as JSON (inline or file)")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_cover_homology)

    s = sub.add_parser("cf-sig", help="Casson-Gordon signature of Hopf-link surgery")
    s.add_argument("-a", type=int, required=True)
    s.add_argument("-b", type=int, required=True)
    s.add_argument("-q", type=int, required=True)
    s.add_argument("--n1", type=int, required=True)
    s.add_argument("--n2", type=int, required=True)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_cf_sig)

    def knot_inputs(s):
        s.add_argument("knot", nargs="?", help="knot JSON (inline, file or -)")
        s.add_argument("--family", help="build the family knot instead, as g:k1,k2,...")
        s.add_argument("--unknot-companions", action="store_true")

    s = sub.add_parser("make-knot", help="emit the JSON description of a family knot")
    knot_inputs(s)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_make_knot)

    s = sub.add_parser("cg-table", help="signature estimates for every character")
    knot_inputs(s)
    s.add_argument("--q", "-q", type=int)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_cg_table)

    s = sub.add_parser("gilmer-check", help="try to certify g4 > g")
    knot_inputs(s)
    s.add_argument("--g", "-g", type=int, required=True)
    s.add_argument("--jobs", "-j", type=int, default=None)
    s.add_argument("--emit-cert")
    s.add_argument("--max-subspaces", type=int, default=2_000_000)
    s.set_defaults(func=cmd_gilmer_check)

    s = sub.add_parser("check-cert", help="re-validate a certificate file")
    s.add_argument("cert")
    s.set_defaults(func=cmd_check_cert)

    s = sub.add_parser("paper-verify", help="reproduce the worked computations")
    s.add_argument("--section", default="all",
                   choices=["example2", "proposition", "analytic", "independence", "all"])
    s.add_argument("--g", "-g", type=int, default=1)
    s.add_argument("--k", default="0", help="comma-separated family indices")
    s.add_argument("--jobs", "-j", type=int, default=1)
    s.add_argument("--json", help="also write the machine report here")
    s.add_argument("--meta", action="store_true", help="timestamp the human output")
    s.set_defaults(func=cmd_paper_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except MalformedCertificate as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except CGError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
