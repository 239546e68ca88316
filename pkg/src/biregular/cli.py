"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 a verified property failed
(identity false, mismatch or counterexample found).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness, relations, spectral, trees
from .errors import BiregularError
from .exact import Poly, charpoly, minpoly
from .graphcore import classify, neighbor_degree_sums, parse_family, parse_graph, to_graph6
from .radical import RadicalScalar

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------ serialization

def scalar_json(x):
    if isinstance(x, RadicalScalar):
        if x.is_rational():
            return scalar_json(x.rational_part())
        return x.to_json()
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    raise TypeError(f"cannot serialize {type(x).__name__}")


def poly_json(p: Poly) -> list:
    return [scalar_json(c) for c in p.coeffs]


def parse_poly(text: str) -> Poly:
    """Comma-separated coefficients, lowest degree first (``1/3`` allowed)."""
    try:
        return Poly([Fraction(t.strip()) for t in text.split(",") if t.strip()])
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad polynomial coefficients {text!r}") from None


def make_report(command: str, source: str, payload: dict) -> dict:
    return {"command": command, "input": source, "payload": payload, "exact": True}


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    lines = [f"command: {report['command']}", f"input: {report['input']}"]
    for key, value in sorted(report["payload"].items()):
        shown = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {shown}")
    lines.append("exact: true")
    return "\n".join(lines)


# ------------------------------------------------------------------ input

def _load_graph(args):
    chosen = [x for x in (args.graph6, args.edges, args.family) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --family")
    if args.graph6:
        return parse_graph(args.graph6), args.graph6
    if args.edges:
        try:
            with open(args.edges, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc}") from None
        return parse_graph(text), f"edges:{args.edges}"
    return parse_family(args.family), f"family:{args.family}"


# --------------------------------------------------------------- commands

def cmd_info(g, args):
    cls = classify(g)
    payload = {
        "n": g.n,
        "edges": g.m,
        "degrees": list(g.degrees),
        "connected": cls.connected,
        "kind": cls.kind,
        "classification": cls.describe(),
        "neighbor_degree_sums": neighbor_degree_sums(g),
    }
    if cls.kind == "regular":
        payload["d"] = cls.d1
    elif cls.kind == "biregular":
        payload.update(d1=cls.d1, d2=cls.d2, n1=cls.n1, n2=cls.n2)
    if g.n <= 62:
        payload["graph6"] = to_graph6(g)
    return payload, EXIT_OK


def cmd_charpoly(g, args):
    b = spectral.build_matrices(g)
    if args.matrix == "NL":
        cp = spectral.charpoly_NL(g)
        mp = minpoly(b.nl_similar())
    else:
        m = b.matrix(args.matrix)
        cp, mp = charpoly(m), minpoly(m)
    return {"matrix": args.matrix, "charpoly": poly_json(cp), "charpoly_str": str(cp),
            "minpoly": poly_json(mp), "minpoly_str": str(mp)}, EXIT_OK


def cmd_verify_biregular(g, args):
    rep = spectral.verify_biregular_identity(g)
    payload = {"q_identity": rep.q_identity, "l_identity": rep.l_identity,
               "nl_identity": rep.nl_identity}
    cls = classify(g)
    if cls.kind == "biregular":
        m1, m2 = spectral.zero_multiplicities(g)
        payload.update(mult_d1=m1, mult_d2=m2)
    return payload, EXIT_OK if rep.all() else EXIT_FAILED


def cmd_transport(g, args):
    qg = spectral.q_charpoly_from_a(g)
    direct = charpoly(spectral.build_matrices(g).Q)
    psi, shift = spectral.even_part(g)
    payload = {"q_charpoly": poly_json(qg), "q_charpoly_str": str(qg),
               "psi": poly_json(psi), "shift": shift, "matches_direct": qg == direct}
    return payload, EXIT_OK if qg == direct else EXIT_FAILED


def cmd_trees(g, args):
    method = args.method
    if method == "matrixtree":
        count = trees.spanning_trees_matrixtree(g)
    elif method == "spectral":
        count = trees.spanning_trees_biregular_spectral(g)
    else:
        params = _family_params(args, "cube" if method == "cube" else "subspace")
        count = trees.trees_cube_layer(*params) if method == "cube" else trees.trees_subspace_layer(*params)
    return {"method": method, "spanning_trees": count}, EXIT_OK


def _family_params(args, want):
    fam = args.family or ""
    name, _, rest = fam.partition(":")
    aliases = {"cube": ("cube", "cube_layer"), "subspace": ("subspace", "subspace_layer")}
    if name not in aliases[want]:
        raise UsageError(f"--method {want} needs --family {want}:...")
    return [int(x) for x in rest.split(",")]


def cmd_relate(g, args):
    x, y = args.x, args.y
    if args.power is None and args.rmax is None:
        rep = relations.find_relation(g, x, y)
        payload = {
            "x": x, "y": y,
            "minpoly_x": poly_json(rep.minpoly_x), "minpoly_y": poly_json(rep.minpoly_y),
            "pairs": [[poly_json(f), poly_json(h)] for f, h in rep.pairs],
            "pairs_str": [f"{f} = {h.format('y')}" for f, h in rep.pairs],
            "kernel_dim": rep.kernel_dim, "nontrivial": rep.nontrivial,
        }
        return payload, EXIT_OK
    rs = [args.power] if args.power is not None else list(range(1, args.rmax + 1))
    found = None
    for r in rs:
        f = relations.power_relation_exists(g, x, y, r)
        if f is not None:
            found = (r, f)
            break
    payload = {"x": x, "y": y, "r_searched": rs, "exists": found is not None}
    if found:
        payload.update(r=found[0], f=poly_json(found[1]), f_str=str(found[1]))
    return payload, EXIT_OK


def cmd_identity(g, args):
    f, h = parse_poly(args.f), parse_poly(args.g)
    ok = relations.verify_polynomial_identity(f, args.x, h, args.y, g)
    payload = {"x": args.x, "y": args.y, "f": poly_json(f), "g": poly_json(h), "holds": ok}
    if ok:
        payload["eigen_transport"] = relations.eigen_transport_check(f, args.x, h, args.y, g)
    return payload, EXIT_OK if ok else EXIT_FAILED


def cmd_jpoly(g, args):
    rep = relations.j_relation(g)
    payload = {"k": rep.k, "m_prime": poly_json(rep.m_prime), "m_prime_str": str(rep.m_prime),
               "c": scalar_json(rep.c), "distinct_eigenvalues": rep.distinct_eigenvalue_count,
               "srg_params": list(rep.srg_params) if rep.srg_params else None}
    return payload, EXIT_OK


def cmd_scan(args):
    try:
        i, c = (int(t) for t in args.shard.split("/"))
    except ValueError:
        raise UsageError(f"bad --shard {args.shard!r}; expected i/c") from None
    checks = tuple(args.check) if args.check else harness.CHECKS
    job = harness.ScanJob(args.nmax, checks, args.rmax, (i, c), args.dedup)
    res = harness.run_scan(job, workers=args.jobs, checkpoint=args.checkpoint)
    payload = res.to_dict()
    payload.pop("elapsed")
    payload["checks"] = list(checks)
    payload["note"] = "absence of counterexamples in range only; conjectures are not verified"
    return payload, EXIT_OK if res.passed else EXIT_FAILED


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    graph = _Parser(add_help=False)
    src = graph.add_argument_group("graph input")
    src.add_argument("--graph6")
    src.add_argument("--edges", metavar="FILE")
    src.add_argument("--family", metavar="NAME:params")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="biregular", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("info", parents=[graph, fmt])
    c = sub.add_parser("charpoly", parents=[graph, fmt])
    c.add_argument("--matrix", choices=("A", "Q", "L", "NL"), default="A")
    sub.add_parser("verify-biregular", parents=[graph, fmt])
    sub.add_parser("transport", parents=[graph, fmt])
    t = sub.add_parser("trees", parents=[graph, fmt])
    t.add_argument("--method", choices=("matrixtree", "spectral", "cube", "subspace"), default="matrixtree")
    r = sub.add_parser("relate", parents=[graph, fmt])
    r.add_argument("--x", choices=relations.MATRIX_IDS, required=True)
    r.add_argument("--y", choices=relations.MATRIX_IDS, required=True)
    r.add_argument("--power", type=int)
    r.add_argument("--rmax", type=int)
    i = sub.add_parser("identity", parents=[graph, fmt])
    i.add_argument("--x", choices=relations.MATRIX_IDS, required=True)
    i.add_argument("--y", choices=relations.MATRIX_IDS, required=True)
    i.add_argument("--f", required=True, help="coefficients lowest first, e.g. 0,-2,0,1")
    i.add_argument("--g", required=True)
    sub.add_parser("jpoly", parents=[graph, fmt])
    s = sub.add_parser("scan", parents=[fmt])
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--check", action="append", choices=harness.CHECKS)
    s.add_argument("--rmax", type=int, default=4)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--shard", default="0/1")
    s.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=None)
    s.add_argument("--checkpoint")
    return p


COMMANDS = {
    "info": cmd_info,
    "charpoly": cmd_charpoly,
    "verify-biregular": cmd_verify_biregular,
    "transport": cmd_transport,
    "trees": cmd_trees,
    "relate": cmd_relate,
    "identity": cmd_identity,
    "jpoly": cmd_jpoly,
}


def dispatch(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "relate" and args.power is None and args.rmax is None:
            if "NL" in (args.x, args.y):
                raise UsageError("relate without --power/--rmax supports A, Q, L only")
        if args.command == "scan":
            source = f"scan:nmax={args.nmax}"
            payload, code = cmd_scan(args)
        else:
            g, source = _load_graph(args)
            payload, code = COMMANDS[args.command](g, args)
    except UsageError as exc:
        print(f"biregular: error: {exc}", file=err)
        return EXIT_USAGE
    except (BiregularError, ValueError) as exc:
        print(f"biregular: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    print(render(make_report(args.command, source, payload), args.format), file=out)
    return code


def main() -> None:
    sys.exit(dispatch())
