"""Command-line front end.

Exit codes: 0 = pass, 1 = claim/verification failure, 2 = input error.
All output is deterministic (sorted JSON keys, no timestamps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as hio
from .catalog import FAMILY_NAMES, build_family
from .certify import certify_family
from .hopf import dual as hopf_dual
from .hopf import verify_algebra, verify_antipode, verify_bialgebra, verify_coalgebra
from .invariants import invariant_report, jacobson_radical
from .repsolver import wedderburn_certificate
from .ydnichols import (
    DATUM_NAMES,
    bosonize,
    braid_equation_check,
    braiding,
    named_datum,
    nichols_dims,
    validate_yd_datum,
    verify_yd,
    yd_module_gamma4p,
)

MAX_DIM = int(os.environ.get("HOPFKIT_MAX_DIM", "64"))
NICHOLS_GUARD_MB = int(os.environ.get("HOPFKIT_NICHOLS_GUARD_MB", "512"))


def _family_params(args) -> dict:
    params = {}
    for key in ("n", "p", "ns", "alpha", "q_power", "lambda_power", "group"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    return params


def _add_family_args(sub):
    sub.add_argument("family", choices=FAMILY_NAMES)
    sub.add_argument("--n", type=int)
    sub.add_argument("--p", type=int)
    sub.add_argument("--ns", type=str, help="comma-separated cyclic orders")
    sub.add_argument("--alpha", type=int)
    sub.add_argument("--q-power", dest="q_power", type=int)
    sub.add_argument("--lambda-power", dest="lambda_power", type=int)
    sub.add_argument("--group", type=str, help="group kind for dual-group")


def cmd_build(args) -> int:
    try:
        h, cd = build_family(args.family, _family_params(args))
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if h.dim > MAX_DIM:
        print(f"error: dimension {h.dim} exceeds HOPFKIT_MAX_DIM={MAX_DIM}", file=sys.stderr)
        return 2
    hio.dump_json(hio.hopf_to_json(h), args.out)
    stem = args.out[:-5] if args.out.endswith(".json") else args.out
    hio.dump_json(hio.candidate_to_json(cd), stem + ".sidecar.json")
    print(f"wrote {args.out} (dim {h.dim}) and {stem}.sidecar.json")
    return 0


def _load_hopf(path):
    try:
        return hio.hopf_from_json(hio.load_json(path))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return None


def cmd_verify(args) -> int:
    h = _load_hopf(args.path)
    if h is None:
        return 2
    ok = True
    for name, fn in (("algebra", verify_algebra), ("coalgebra", verify_coalgebra),
                     ("bialgebra", verify_bialgebra), ("antipode", verify_antipode)):
        rep = fn(h)
        print(f"{name}: {'pass' if rep.ok else 'FAIL'}")
        for f in rep.failures:
            print(f"  {f}")
        ok = ok and rep.ok
    return 0 if ok else 1


def cmd_invariants(args) -> int:
    h = _load_hopf(args.path)
    if h is None:
        return 2
    cd = None
    if args.expect:
        try:
            cd = hio.candidate_from_json(hio.load_json(args.expect), h)
        except (OSError, json.JSONDecodeError, KeyError) as e:
            print(f"parse error in sidecar: {e}", file=sys.stderr)
            return 2
    rep = invariant_report(h, cd)
    payload = hio.report_to_json(rep)
    out = json.dumps(payload, sort_keys=True, indent=1)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    code = 0
    if not all(rep.certificates.values()):
        code = 1
    if cd is not None:
        comparable = {
            "dim": rep.dim,
            "coradical_dim": rep.coradical_dim,
            "radical_dim": rep.radical_dim,
            "grouplike_count": rep.grouplike_count,
            "grouplike_orders": rep.grouplike_orders,
            "semisimple": rep.semisimple,
            "chevalley": rep.chevalley,
            "distinguished_grouplike": rep.distinguished_grouplike_index,
        }
        for key, got in comparable.items():
            if key in cd.expected and got != cd.expected[key]:
                print(f"claim mismatch: {key} expected {cd.expected[key]} got {got}",
                      file=sys.stderr)
                code = 1
    return code


def cmd_dual(args) -> int:
    h = _load_hopf(args.path)
    if h is None:
        return 2
    hio.dump_json(hio.hopf_to_json(hopf_dual(h)), args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_simples(args) -> int:
    h = _load_hopf(args.path)
    if h is None:
        return 2
    try:
        side = hio.load_json(args.modules)
        cd = hio.candidate_from_json(side, h)
    except (OSError, json.JSONDecodeError, KeyError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    rad = jacobson_radical(h).dim
    cert = wedderburn_certificate(h, cd.simples, rad)
    payload = {
        "ok": cert.ok,
        "profile": cert.profile,
        "radical_dim": rad,
        "details": cert.details,
    }
    print(json.dumps(payload, sort_keys=True, indent=1))
    return 0 if cert.ok else 1


def _parse_colon(s, what):
    parts = s.split(":")
    if len(parts) != 2:
        raise ValueError(f"expected {what} as name:index, got {s!r}")
    return parts[0], int(parts[1])


def cmd_nichols(args) -> int:
    from .cyclotomic import root_of_unity
    from .linalg import Matrix

    try:
        if args.qline:
            if ":" in args.qline:
                n, k = (int(x) for x in args.qline.split(":"))
            else:
                n, k = int(args.qline), 1
            c = Matrix(1, 1, n, [[root_of_unity(n, k)]])
            v = 1
            label = f"qline({n},{k})"
        else:
            cls = _parse_colon(args.cls, "--class")
            rep = _parse_colon(args.rep, "--rep")
            mod = yd_module_gamma4p(args.p, cls, rep)
            ok, why = verify_yd(mod)
            if not ok:
                print(f"module fails the Yetter-Drinfeld axiom: {why}", file=sys.stderr)
                return 1
            c = braiding(mod)
            v = mod.dim
            label = mod.label
        report = nichols_dims(c, v, cutoff=args.cutoff, guard_mb=NICHOLS_GUARD_MB)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    payload = {
        "module": label,
        "ranks": report.ranks,
        "cutoff": report.cutoff,
        "truncated": report.truncated,
        "total_dim": report.total_dim,
        "guard_hit": report.guard_hit,
    }
    print(json.dumps(payload, sort_keys=True, indent=1))
    return 0


def _datum_from_file(path):
    from .cyclotomic import cyc_from_json
    from .hopf import Element
    from .ydnichols import YDDatum

    obj = hio.load_json(path)
    L = hio.hopf_from_json(obj["algebra"])
    g = Element(L, [cyc_from_json(c) for c in obj["g"]])
    chi = [cyc_from_json(c) for c in obj["chi"]]
    return YDDatum(L, g, chi, cyc_from_json(obj["q"]), label=path)


def cmd_yd_verify(args) -> int:
    try:
        if args.file:
            d = _datum_from_file(args.file)
            ok, why = validate_yd_datum(d)
            print(f"{d.label}: {'valid' if ok else 'INVALID'}{'' if ok else ' (' + why + ')'}")
            return 0 if ok else 1
        if args.datum:
            d = named_datum(args.datum, args.p or 3)
            ok, why = validate_yd_datum(d)
            print(f"{d.label}: {'valid' if ok else 'INVALID'}{'' if ok else ' (' + why + ')'}")
            return 0 if ok else 1
        cls = _parse_colon(args.cls, "--class")
        rep = _parse_colon(args.rep, "--rep")
        mod = yd_module_gamma4p(args.p, cls, rep)
        ok, why = verify_yd(mod)
        print(f"{mod.label}: {'valid' if ok else 'INVALID'}{'' if ok else ' (' + why + ')'}")
        if ok:
            c = braiding(mod)
            print(f"braid equation: {'pass' if braid_equation_check(c, mod.dim) else 'FAIL'}")
        return 0 if ok else 1
    except (ValueError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def cmd_bosonize(args) -> int:
    try:
        d = named_datum(args.datum, args.p or 3)
        ok, why = validate_yd_datum(d)
        if not ok:
            print(f"invalid datum: {why}", file=sys.stderr)
            return 1
        h = bosonize(d)
    except (ValueError, AssertionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.out:
        hio.dump_json(hio.hopf_to_json(h), args.out)
        print(f"wrote {args.out} (dim {h.dim})")
    else:
        print(json.dumps(hio.hopf_to_json(h), sort_keys=True, indent=1))
    return 0


def cmd_certify(args) -> int:
    try:
        suite = certify_family(args.family, _family_params(args))
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(suite.render())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(suite.to_json(), fh, sort_keys=True, indent=1)
            fh.write("\n")
    return 0 if suite.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="hopfkit",
                                 description="exact Hopf algebra construction and certification")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a catalog family to JSON")
    _add_family_args(b)
    b.add_argument("--out", required=True)
    b.set_defaults(fn=cmd_build)

    v = sub.add_parser("verify", help="run the Hopf axiom verifiers on a file")
    v.add_argument("path")
    v.set_defaults(fn=cmd_verify)

    i = sub.add_parser("invariants", help="compute the invariant report")
    i.add_argument("path")
    i.add_argument("--expect", help="sidecar JSON with claimed data")
    i.add_argument("--json", help="write the report to this path")
    i.set_defaults(fn=cmd_invariants)

    d = sub.add_parser("dual", help="write the dual Hopf algebra")
    d.add_argument("path")
    d.add_argument("--out", required=True)
    d.set_defaults(fn=cmd_dual)

    s = sub.add_parser("simples", help="Wedderburn certificate for a module list")
    s.add_argument("path")
    s.add_argument("modules", help="sidecar JSON carrying the modules")
    s.set_defaults(fn=cmd_simples)

    n = sub.add_parser("nichols", help="quantum symmetrizer ranks")
    n.add_argument("--group", choices=["gamma4p"], default="gamma4p")
    n.add_argument("--p", type=int, default=5)
    n.add_argument("--class", dest="cls", help="conjugacy class, e.g. y:1 or x:2")
    n.add_argument("--rep", help="centralizer irrep, e.g. psi:1 or chi:3")
    n.add_argument("--qline", help="one-dimensional braiding N or N:k for zeta_N^k")
    n.add_argument("--cutoff", type=int)
    n.set_defaults(fn=cmd_nichols)

    y = sub.add_parser("yd-verify", help="validate a Yetter-Drinfeld datum or module")
    y.add_argument("--datum", choices=list(DATUM_NAMES))
    y.add_argument("--file", help="JSON datum: {algebra, g, chi, q}")
    y.add_argument("--p", type=int)
    y.add_argument("--class", dest="cls")
    y.add_argument("--rep")
    y.set_defaults(fn=cmd_yd_verify)

    bo = sub.add_parser("bosonize", help="biproduct of a quantum line with a datum")
    bo.add_argument("--datum", required=True, choices=list(DATUM_NAMES))
    bo.add_argument("--p", type=int)
    bo.add_argument("--out")
    bo.set_defaults(fn=cmd_bosonize)

    c = sub.add_parser("certify", help="re-verify every claimed invariant of a family")
    _add_family_args(c)
    c.add_argument("--json", help="also write the table as JSON")
    c.set_defaults(fn=cmd_certify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
