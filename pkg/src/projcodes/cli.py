"""Command-line surface.

Subcommands: check, path, mds-chain, class, verify-connectivity, distance.
Exit codes: 0 success, 1 invalid input or budget refusal, 2 internal
verification failure (emitted certificate failed its own re-check).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from . import oracle, pathfinder, projective
from .codes import CodeError, LinearCode
from .field import FieldCtx, FieldError
from .grassmann import GrassmannParams, distance as g_distance
from .matspace import BudgetExceeded, format_matrix
from .pathfinder import PathError


class CliInputError(ValueError):
    pass


def _load_code(arg, field_spec):
    """Code argument: inline matrix text, inline JSON, or @file."""
    text = arg
    if arg.startswith("@"):
        with open(arg[1:]) as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        return LinearCode.from_json(json.loads(text))
    ctx = FieldCtx.from_spec(field_spec)
    return LinearCode.from_text(ctx, text)


def _emit(obj, fmt, text_renderer):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        text_renderer(obj)


def cmd_check(args):
    code = _load_code(args.code, args.field)
    nondeg = code.is_nondegenerate()
    proj = code.is_projective()
    mds = proj and code.is_mds_arc()
    points = ([list(p) for p in code.projective_system().points]
              if nondeg else None)
    out = {"n": code.n, "k": code.k, "q": code.ctx.q,
           "nondegenerate": nondeg, "projective": proj, "mds": mds,
           "projective_system": points}

    def render(o):
        print("[%d,%d]_%d code %s" % (o["n"], o["k"], o["q"],
                                      format_matrix(code.gen)))
        print("nondegenerate: %s" % o["nondegenerate"])
        print("projective:    %s" % o["projective"])
        print("mds:           %s" % o["mds"])
        if o["projective_system"] is not None:
            print("points:        %s" % o["projective_system"])

    _emit(out, args.format, render)
    return 0


def _run_path(args, use_mds):
    a = _load_code(args.codea, args.field)
    b = _load_code(args.codeb, args.field)
    if use_mds:
        cert = pathfinder.mds_chain(a, b)
        predicate = "mds"
    else:
        cert = pathfinder.connect(a, b)
        predicate = "projective"
    result = pathfinder.verify_certificate(cert, predicate)
    if not result:
        print("internal verification failed: %s" % result.reason, file=sys.stderr)
        return 2
    print(json.dumps(cert.to_json(), sort_keys=True))
    return 0


def cmd_path(args):
    return _run_path(args, use_mds=(args.predicate == "mds"))


def cmd_mds_chain(args):
    return _run_path(args, use_mds=True)


def cmd_class(args):
    code = _load_code(args.code, args.field)
    if not code.is_projective():
        raise CliInputError("class analysis requires a projective code")
    x = projective.SpecialSet.of_code(code)
    members = projective.class_enumerate(x, budget=args.budget)
    m = projective.automorphism_group_order(code, budget=args.budget)
    total = (code.ctx.q - 1) ** code.n * factorial(code.n)
    ok = len(members) * m == total
    out = {"class_size": len(members), "aut_order": m,
           "monomial_group_order": total,
           "formula_check": "pass" if ok else "fail"}

    def render(o):
        print("class size:      %d" % o["class_size"])
        print("aut group order: %d" % o["aut_order"])
        print("(q-1)^n n!:      %d" % o["monomial_group_order"])
        print("formula check:   %s" % o["formula_check"])

    _emit(out, args.format, render)
    return 0 if ok else 2


def cmd_verify_connectivity(args):
    if args.q is not None:
        ctx = FieldCtx.from_order(args.q)
    else:
        ctx = FieldCtx.from_spec(args.field)
    params = GrassmannParams(ctx, args.n, args.k)
    params.require_graph()
    rep = oracle.report(params, args.predicate, budget=args.budget)
    out = rep.to_json()

    def render(o):
        print("[%d,%d]_%d %s subgraph" % (o["n"], o["k"], o["q"], o["predicate"]))
        print("vertices:   %d" % o["vertex_count"])
        print("components: %d %s" % (o["component_count"], o["component_sizes"]))
        print("diameter:   %d" % o["diameter_within"])
        print("detour pairs: %d" % o["detour_pairs"])

    _emit(out, args.format, render)
    return 0


def cmd_distance(args):
    a = _load_code(args.codea, args.field)
    b = _load_code(args.codeb, args.field)
    if a.params != b.params:
        raise CliInputError("codes have different (n, k, q)")
    d_formula = g_distance(a.space, b.space)
    out = {"grassmann_distance": d_formula}
    if args.within:
        pred = oracle.get_predicate(args.within)
        if not (pred(a) and pred(b)):
            raise CliInputError("both codes must satisfy predicate %r" % args.within)
        dist = oracle.bfs_within(a, pred)
        out["within_predicate"] = args.within
        out["within_distance"] = dist.get(b)

    def render(o):
        print("grassmann distance: %d" % o["grassmann_distance"])
        if "within_distance" in o:
            d = o["within_distance"]
            print("within %s subgraph: %s" % (o["within_predicate"],
                                              "unreachable" if d is None else d))

    _emit(out, args.format, render)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q=2",
                        help="field spec 'q=p^m[:modulus-coeffs]', e.g. q=4:1,1,1")
    common.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                        help="enumeration budget (hard limit, refused if exceeded)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sampling (reserved; determinism)")
    ap = argparse.ArgumentParser(prog="projcodes",
                                 description="Projective codes in the Grassmann "
                                             "graph: predicates, certified paths, "
                                             "classes, exhaustive verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def sub_add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = sub_add("check", help="predicates and projective system of a code")
    p.add_argument("code")
    p.set_defaults(func=cmd_check)

    p = sub_add("path", help="certified path between two codes (JSON)")
    p.add_argument("codea")
    p.add_argument("codeb")
    p.add_argument("--predicate", choices=("projective", "mds"),
                   default="projective")
    p.set_defaults(func=cmd_path)

    p = sub_add("mds-chain", help="certified all-MDS path")
    p.add_argument("codea")
    p.add_argument("codeb")
    p.set_defaults(func=cmd_mds_chain)

    p = sub_add("class", help="equivalence class size and automorphisms")
    p.add_argument("code")
    p.set_defaults(func=cmd_class)

    p = sub_add("verify-connectivity",
                 help="exhaustive subgraph census for (n, k, q)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("q", type=int, nargs="?", default=None)
    p.add_argument("--predicate", choices=sorted(oracle.PREDICATES),
                   default="projective")
    p.set_defaults(func=cmd_verify_connectivity)

    p = sub_add("distance", help="Grassmann and within-subgraph distance")
    p.add_argument("codea")
    p.add_argument("codeb")
    p.add_argument("--within", choices=sorted(oracle.PREDICATES), default=None)
    p.set_defaults(func=cmd_distance)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; map onto the input-error code
        return 0 if e.code == 0 else 1
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print("refused: %s" % e, file=sys.stderr)
        return 1
    except (CliInputError, CodeError, FieldError, PathError, ValueError,
            OSError, json.JSONDecodeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
