"""Command-line entry point (``arrowribbon``).

Exit codes: 0 success, 1 a verification failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import duality, graphpoly, transfer, vlink
from .polyring import LaurentPoly, PolyError, iter_terms
from .ribbon import ArrowRibbonGraph, GraphError, _norm_id, from_json

__all__ = ["main", "build_parser"]


class InputError(Exception):
    """Bad input file or option value; reported with exit code 2."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> ArrowRibbonGraph:
    try:
        return from_json(_read(path))
    except GraphError as exc:
        raise InputError(str(exc)) from None


def _link(path: str) -> vlink.VirtualLinkDiagram:
    try:
        return vlink.parse_gauss(_read(path))
    except vlink.GaussError as exc:
        raise InputError(str(exc)) from None


def _edges(G: ArrowRibbonGraph, text: str | None) -> list:
    if text is None:
        return list(G.edge_ids)
    out = [_norm_id(x.strip()) for x in text.split(",") if x.strip()]
    for e in out:
        if e not in G.edge_ids:
            raise InputError(f"unknown edge {e!r}")
    return out


def _exp(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def poly_json(p: LaurentPoly) -> dict:
    return {"text": str(p),
            "terms": [{"coeff": c, "monomial": {str(v): _exp(e) for v, e in m.items()}}
                      for m, c in iter_terms(p)]}


def _emit_poly(p: LaurentPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly_json(p), sort_keys=True))
    else:
        print(p)


def _emit_graph(G: ArrowRibbonGraph, fmt: str) -> None:
    print(json.dumps(G.to_spec(), indent=None if fmt == "json" else 2))


def _emit_checks(checks: list[tuple[str, bool]], fmt: str, summary: str | None = None) -> int:
    ok = all(flag for _, flag in checks)
    if fmt == "json":
        print(json.dumps({"checks": [{"name": n, "pass": f} for n, f in checks],
                          "pass": ok}, sort_keys=True))
    else:
        for name, flag in checks:
            print(f"{name}: {'PASS' if flag else 'FAIL'}")
        if summary:
            print(summary)
    return 0 if ok else 1


# -- subcommands ------------------------------------------------------------

def cmd_graph_poly(args) -> int:
    G = _graph(args.file)
    kind = args.kind or "arrow"
    try:
        if kind == "arrow":
            p = graphpoly.arrow_dichromatic(G)
        elif kind == "dichromatic":
            p = graphpoly.dichromatic(G)
        elif kind == "tutte":
            p = graphpoly.tutte(G)
        elif kind == "abr":
            p = graphpoly.arrow_bollobas_riordan(G)
        elif kind == "sbr":
            p = graphpoly.signed_bollobas_riordan(G)
        else:
            p = graphpoly.signed_dichromatic_substitution(G)
    except graphpoly.MissingSigns as exc:
        raise InputError(str(exc)) from None
    _emit_poly(p, args.format)
    return 0


def cmd_graph_dual(args) -> int:
    G = _graph(args.file)
    _emit_graph(duality.partial_dual(G, _edges(G, args.D)), args.format)
    return 0


def _one_edge(G: ArrowRibbonGraph, text: str):
    (e,) = _edges(G, text) or [None]
    if e is None:
        raise InputError("an edge is required")
    return e


def cmd_graph_delete(args) -> int:
    G = _graph(args.file)
    _emit_graph(duality.delete(G, _one_edge(G, args.e)), args.format)
    return 0


def cmd_graph_contract(args) -> int:
    G = _graph(args.file)
    _emit_graph(duality.contract(G, _one_edge(G, args.e)), args.format)
    return 0


_LINK_POLYS = {
    "link-bracket": vlink.kauffman_bracket,
    "link-arrow": vlink.arrow_bracket,
    "link-jones": vlink.jones,
    "link-normalized": vlink.normalized_arrow,
}
_LINK_HELP = {
    "link-bracket": "Kauffman bracket of a Gauss code",
    "link-arrow": "unnormalized arrow polynomial",
    "link-jones": "Jones polynomial in t",
    "link-normalized": "normalized arrow polynomial (an invariant)",
}


def cmd_link_poly(args) -> int:
    _emit_poly(_LINK_POLYS[args.command](_link(args.file)), args.format)
    return 0


def _state(L, text: str) -> dict:
    try:
        return transfer.parse_state(L, text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _state_label(L, s: dict) -> str:
    return ",".join(s[c] for c in L.crossings) or "(empty)"


def cmd_link_graph(args) -> int:
    L = _link(args.file)
    _emit_graph(transfer.state_graph(L, _state(L, args.s)), args.format)
    return 0


def cmd_verify_thistlethwaite(args) -> int:
    L = _link(args.file)
    if args.s is not None and not args.all_states:
        states = [_state(L, args.s)]
    else:
        states = list(vlink.all_states(L))
    lhs = vlink.arrow_bracket(L)
    checks = []
    for s in states:
        rep = transfer.Report("thistlethwaite", lhs, transfer.thistlethwaite_rhs(L, s))
        checks.append((f"state {_state_label(L, s)}", rep.equal))
    passed = sum(flag for _, flag in checks)
    verdict = "PASS" if passed == len(checks) else "FAIL"
    return _emit_checks(checks, args.format, f"{passed}/{len(checks)} states {verdict}")


def _graph_checks(G: ArrowRibbonGraph, max_edges: int) -> list[tuple[str, bool]]:
    if G.n_edges > max_edges:
        raise InputError(f"graph has {G.n_edges} edges; property checks need at most {max_edges}")
    E = list(G.edge_ids)
    full = (1 << G.n_edges) - 1
    cf = duality.canonical_form(G, max_edges=None)
    checks = [("(a) empty partial dual", duality.canonical_form(duality.partial_dual(G, []), max_edges=None) == cf)]
    involutive = dual_ok = orient_ok = comp_ok = pardu = True
    for mask in range(1 << G.n_edges):
        D = [E[i] for i in range(G.n_edges) if mask >> i & 1]
        GD = duality.partial_dual(G, D)
        involutive &= duality.canonical_form(duality.partial_dual(GD, D), max_edges=None) == cf
        dual_ok &= GD.n_vertices == G.state_stats(D)[1]
        orient_ok &= GD.is_orientable() == G.is_orientable()
        comp_ok &= GD.components_count(full) == G.components_count(full)
        pardu &= graphpoly.verify_partial_duality_identity(G, D)
    natural = duality.canonical_form(duality.natural_dual(duality.natural_dual(G)), max_edges=None) == cf
    checks += [("(b) natural dual twice", natural), ("(c) (G^D)^D = G", involutive),
               ("vertices of G^D = boundary components", dual_ok),
               ("(d) orientability preserved", orient_ok), ("(e) components preserved", comp_ok),
               ("partial duality identity at a=1", pardu)]
    A = graphpoly.arrow_dichromatic(G)
    A1 = A.substitute({graphpoly.a_: 1})
    cd_ok = cd1_ok = True
    for e in E:
        case, rhs = graphpoly.contraction_deletion(G, e)
        if rhs is not None:
            cd_ok &= rhs == A
        cd1_ok &= graphpoly.contraction_deletion(G, e, a=1)[1] == A1
    checks += [("contraction-deletion", cd_ok), ("contraction-deletion at a=1", cd1_ok),
               ("BR/Z relation", graphpoly.verify_br_z_relation(G))]
    return checks


def _link_checks(L) -> list[tuple[str, bool]]:
    states = list(vlink.all_states(L))
    lhs = vlink.arrow_bracket(L)
    checks = [("thistlethwaite, all states",
               all(transfer.thistlethwaite_rhs(L, s) == lhs for s in states))]
    if L.n_crossings <= 4:
        checks.append(("state duality, all pairs",
                       all(transfer.verify_state_duality(L, s, t) for s in states for t in states)))
    checks.append(("all-A specialization", transfer.specialization_all_A(L).equal))
    checks.append(("seifert specialization", transfer.specialization_seifert(L).equal))
    return checks


def cmd_verify_properties(args) -> int:
    text = _read(args.file)
    if text.lstrip().startswith("{"):
        try:
            G = from_json(text)
        except GraphError as exc:
            raise InputError(str(exc)) from None
        checks = _graph_checks(G, args.max_edges)
    else:
        try:
            L = vlink.parse_gauss(text)
        except vlink.GaussError as exc:
            raise InputError(str(exc)) from None
        checks = _link_checks(L)
    passed = sum(flag for _, flag in checks)
    return _emit_checks(checks, args.format, f"{passed}/{len(checks)} properties "
                        f"{'PASS' if passed == len(checks) else 'FAIL'}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("file", help="input file, or - for stdin")

    parser = argparse.ArgumentParser(prog="arrowribbon",
                                     description="Arrow ribbon graph and virtual link invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph-poly", parents=[common], help="state-sum polynomial of a graph")
    g = p.add_mutually_exclusive_group()
    for flag, kind in (("--arrow", "arrow"), ("--dichromatic", "dichromatic"), ("--tutte", "tutte"),
                       ("--abr", "abr"), ("--sbr", "sbr"), ("--signed-dichromatic", "signed-dichromatic")):
        g.add_argument(flag, dest="kind", action="store_const", const=kind)
    p.set_defaults(func=cmd_graph_poly)

    p = sub.add_parser("graph-dual", parents=[common], help="partial dual (all edges by default)")
    p.add_argument("-D", metavar="EDGES", help="comma-separated edge ids")
    p.set_defaults(func=cmd_graph_dual)

    for name, func in (("graph-delete", cmd_graph_delete), ("graph-contract", cmd_graph_contract)):
        p = sub.add_parser(name, parents=[common], help=f"{name.split('-')[1]} one edge")
        p.add_argument("-e", metavar="EDGE", required=True, help="edge id")
        p.set_defaults(func=func)

    for name in _LINK_POLYS:
        p = sub.add_parser(name, parents=[common], help=_LINK_HELP[name])
        p.set_defaults(func=cmd_link_poly)

    p = sub.add_parser("link-graph", parents=[common], help="signed arrow ribbon graph of a state")
    p.add_argument("-s", metavar="STATE", required=True,
                   help="A/B letters in crossing order, or allA, allB, seifert, disoriented")
    p.set_defaults(func=cmd_link_graph)

    p = sub.add_parser("verify-thistlethwaite", parents=[common],
                       help="compare the bracket with its state-graph expansion")
    p.add_argument("--all-states", action="store_true", help="check every state")
    p.add_argument("-s", metavar="STATE", help="single state to expand (default: every state)")
    p.set_defaults(func=cmd_verify_thistlethwaite)

    p = sub.add_parser("verify-properties", parents=[common],
                       help="identity checks for a graph (JSON) or a link (Gauss code)")
    p.add_argument("--max-edges", type=int, default=8,
                   help="size bound for canonical-form comparisons")
    p.set_defaults(func=cmd_verify_properties)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, PolyError, duality.CanonicalFormTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
