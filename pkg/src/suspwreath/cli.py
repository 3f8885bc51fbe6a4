"""Command-line front end.

Exit codes: 0 success (property holds), 1 property fails, 2 unknown (budget
exhausted), 3 usage or input error.  Complex input is read from ``-i`` or
stdin, output goes to ``-o`` or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import fileio
from .budget import DEFAULT_BUDGET, BudgetExceeded
from .complex import euler_characteristic, f_vector, join
from .constructions import one_point_suspension, reduced_join, wreath_product
from .decomposability import (
    find_morse_matching,
    find_shelling,
    is_cone,
    is_constructible,
    is_non_evasive,
    is_vertex_decomposable,
    lift_morse_matching,
    lift_shelling,
    MorseMatching,
)
from .generators import GENERATORS
from .polytope import dual_wedge, polytope_wreath, verify_facet_system
from .symmetry import automorphism_group, wreath_group_generators
from .topology import (
    dual_diameter,
    hirsch_gap,
    is_cohen_macaulay_Q,
    is_pseudomanifold,
    neighborliness,
    neighborly_target,
    reduced_homology,
)

OK, FAILED, UNKNOWN, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# -- io helpers -----------------------------------------------------------------


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _one_input(args) -> str | None:
    inputs = args.input or []
    if len(inputs) > 1:
        raise UsageError("expected at most one -i")
    return inputs[0] if inputs else None


def _complex(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        K = fileio.parse_complex(_read_text(_one_input(args)), prune=args.prune)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return K


def _emit(args, record: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- construction commands --------------------------------------------------


def cmd_gen(args) -> int:
    fn, nparams = GENERATORS[args.family]
    if len(args.params) != nparams:
        raise UsageError(f"{args.family} takes {nparams} integer parameter(s)")
    _write_text(args.output, fileio.format_complex(fn(*args.params)))
    return OK


def cmd_susp(args) -> int:
    _write_text(args.output, fileio.format_complex(one_point_suspension(_complex(args), args.vertex)))
    return OK


def cmd_rjoin(args) -> int:
    _write_text(args.output, fileio.format_complex(reduced_join(args.d, _complex(args), args.vertex)))
    return OK


def cmd_wreath(args) -> int:
    _write_text(args.output, fileio.format_complex(wreath_product(args.d, _complex(args))))
    return OK


def cmd_join(args) -> int:
    if not args.input or len(args.input) != 2:
        raise UsageError("join needs exactly two -i files")
    A, B = (fileio.parse_complex(_read_text(p), prune=args.prune) for p in args.input)
    _write_text(args.output, fileio.format_complex(join(A, B)))
    return OK


# -- analysis -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    K = _complex(args)
    what = args.what
    if what == "fvector":
        fv = f_vector(K)
        _emit(args, {f"f_{i}": c for i, c in enumerate(fv)}, [" ".join(map(str, fv))])
    elif what == "euler":
        chi = euler_characteristic(K)
        _emit(args, {"euler": chi, "reduced_euler": chi - 1}, [f"euler {chi}", f"reduced_euler {chi - 1}"])
    elif what == "homology":
        H = reduced_homology(K)
        _emit(args, {f"H~_{i - 1}": str(g) for i, g in enumerate(H.groups)}, H.lines())
    elif what == "neighborly":
        k = neighborliness(K, args.budget)
        target = neighborly_target(K)
        yes = k >= target
        _emit(
            args,
            {"neighborliness": k, "target": target, "neighborly": yes},
            [f"neighborliness {k}", f"neighborly {'yes' if yes else 'no'} (target {target})"],
        )
    elif what == "pseudomanifold":
        kind = is_pseudomanifold(K)
        _emit(args, {"pseudomanifold": kind}, [kind])
    elif what == "dualdiam":
        dd = dual_diameter(K)
        _emit(args, {"dual_diameter": dd}, [str(dd)])
    elif what == "hirsch":
        dd = dual_diameter(K)
        bound = K.n_vertices - (K.dimension() + 1)
        gap = hirsch_gap(K)
        _emit(
            args,
            {"dual_diameter": dd, "hirsch_bound": bound, "hirsch_gap": gap},
            [f"dual_diameter {dd}", f"hirsch_bound {bound}", f"hirsch_gap {gap}"],
        )
    return OK


CHECKS = {
    "vd": lambda K, b: is_vertex_decomposable(K, b),
    "shellable": lambda K, b: find_shelling(K, b),
    "constructible": lambda K, b: is_constructible(K, b),
    "cone": lambda K, b: is_cone(K),
    "nonevasive": lambda K, b: is_non_evasive(K, b),
    "collapsible": lambda K, b: find_morse_matching(K, b),
    "cm": lambda K, b: is_cohen_macaulay_Q(K),
}


def _certificate_text(what: str, verdict) -> str:
    cert = verdict.certificate
    if not verdict.holds:
        return "" if cert is None else f"# obstruction: {cert!r}\n"
    if what == "shellable":
        return fileio.format_shelling(cert)
    if what == "collapsible":
        return fileio.format_matching(cert)
    if what == "cone":
        return f"apex {cert}\n"
    if what in ("vd", "nonevasive", "constructible"):
        return fileio.format_tree(cert)
    return ""


def cmd_check(args) -> int:
    K = _complex(args)
    verdict = CHECKS[args.what](K, args.budget)
    if args.certificate:
        _write_text(args.certificate, _certificate_text(args.what, verdict))
    record = {
        "check": args.what,
        "status": verdict.status,
        "nodes_explored": verdict.nodes_explored,
        "reason": verdict.reason,
    }
    line = verdict.status + (f": {verdict.reason}" if verdict.reason else "")
    _emit(args, record, [line])
    return {"holds": OK, "fails": FAILED}.get(verdict.status, UNKNOWN)


def cmd_lift(args) -> int:
    K = _complex(args)
    cert = _read_text(args.certificate)
    if args.what == "shelling":
        order = lift_shelling(K, fileio.parse_shelling(cert), args.vertex)
        _write_text(args.output, fileio.format_shelling(order))
    else:
        mu: MorseMatching = lift_morse_matching(K, fileio.parse_matching(cert), args.vertex)
        _write_text(args.output, fileio.format_matching(mu))
    return OK


def cmd_sym(args) -> int:
    K = _complex(args)
    if args.what == "aut":
        G = automorphism_group(K, args.budget)
        head = f"order {G.order}" + ("" if G.exact else " (lower bound)")
        print(head)
        for line in G.lines():
            print(line)
        return OK if G.exact else UNKNOWN
    if args.what == "transitive":
        G = automorphism_group(K, args.budget)
        if G.is_transitive():
            print("transitive")
            return OK
        if not G.exact:
            print("unknown")
            return UNKNOWN
        print("not transitive")
        return FAILED
    if args.d is None:
        raise UsageError("wreathgroup needs -d")
    G = wreath_group_generators(args.d, K, automorphism_group(K, args.budget))
    print(f"order {G.order}")
    for line in G.lines():
        print(line)
    return OK


def cmd_poly(args) -> int:
    inputs = args.input or []
    if args.what == "wreath":
        if len(inputs) != 2:
            raise UsageError("poly wreath needs exactly two -i files")
        P, Q = (fileio.parse_polytope(_read_text(p)) for p in inputs)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            W = polytope_wreath(P, Q)
        for w in caught:
            print(f"notice: {w.message}", file=sys.stderr)
        _write_text(args.output, fileio.format_polytope(W))
        return OK
    if len(inputs) > 1:
        raise UsageError("expected at most one -i")
    P = fileio.parse_polytope(_read_text(inputs[0] if inputs else None))
    if args.what == "dualwedge":
        if args.vertex is None:
            raise UsageError("poly dualwedge needs -v")
        _write_text(args.output, fileio.format_polytope(dual_wedge(P, args.vertex)))
        return OK
    verdict = verify_facet_system(P, P.facets, simplicial=args.simplicial)
    print(verdict.status + (f": {verdict.reason} {verdict.certificate}" if not verdict.holds else ""))
    return OK if verdict.holds else FAILED


def cmd_suite(args) -> int:
    from .suite import run_suite

    rows = run_suite(args.threads)
    for num, title, ok, detail in rows:
        print(f"{num:>2}  {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    return OK if all(r[2] for r in rows) else FAILED


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker cap (used by paper-suite)")
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("-i", "--input", action="append", help="input file (default stdin)")
    io.add_argument("-o", "--output", help="output file (default stdout)")
    io.add_argument("--prune", action="store_true", help="drop non-maximal facets with a warning")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help=f"search node limit (default {DEFAULT_BUDGET})")

    p = _Parser(prog="suspwreath", description="One-point suspensions and wreath products of simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common, io], help="generate a standard complex")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("params", type=int, nargs="*")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("susp", parents=[common, io], help="one-point suspension")
    s.add_argument("-v", "--vertex", required=True)
    s.set_defaults(func=cmd_susp)

    r = sub.add_parser("rjoin", parents=[common, io], help="reduced join with a simplex boundary")
    r.add_argument("-d", type=int, required=True)
    r.add_argument("-v", "--vertex", required=True)
    r.set_defaults(func=cmd_rjoin)

    w = sub.add_parser("wreath", parents=[common, io], help="wreath product with a simplex boundary")
    w.add_argument("-d", type=int, required=True)
    w.set_defaults(func=cmd_wreath)

    j = sub.add_parser("join", parents=[common, io], help="join of two complexes")
    j.set_defaults(func=cmd_join)

    a = sub.add_parser("analyze", parents=[common, io, budget], help="invariants")
    a.add_argument("what", choices=["fvector", "euler", "homology", "neighborly", "pseudomanifold", "dualdiam", "hirsch"])
    a.add_argument("--json", action="store_true", help="one flat JSON record")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", parents=[common, io, budget], help="decomposition properties")
    c.add_argument("what", choices=sorted(CHECKS))
    c.add_argument("--certificate", help="write the certificate here")
    c.add_argument("--json", action="store_true", help="one flat JSON record")
    c.set_defaults(func=cmd_check)

    li = sub.add_parser("lift", parents=[common, io], help="lift a certificate to a one-point suspension")
    li.add_argument("what", choices=["shelling", "morse"])
    li.add_argument("-v", "--vertex", required=True)
    li.add_argument("--certificate", required=True, help="certificate of the input complex")
    li.set_defaults(func=cmd_lift)

    sy = sub.add_parser("sym", parents=[common, io, budget], help="automorphism groups")
    sy.add_argument("what", choices=["aut", "transitive", "wreathgroup"])
    sy.add_argument("-d", type=int)
    sy.set_defaults(func=cmd_sym)

    po = sub.add_parser("poly", parents=[common, io], help="exact polytope constructions")
    po.add_argument("what", choices=["dualwedge", "wreath", "verify"])
    po.add_argument("-v", "--vertex")
    po.add_argument("--simplicial", action="store_true", help="also check ridges (verify)")
    po.set_defaults(func=cmd_poly)

    ps = sub.add_parser("paper-suite", parents=[common], help="run the acceptance suite")
    ps.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except BudgetExceeded:
        print("unknown: budget exhausted", file=sys.stderr)
        return UNKNOWN
    except (UsageError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
