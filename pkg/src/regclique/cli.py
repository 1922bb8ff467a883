"""Command line: ``regclique certify | construct | paper-audit``.

Exit codes: 0 success, 1 a claim or hypothesis failed (or a search ran out
of budget), 2 input/parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import audit
from .cliques import DEFAULT_BUDGET, SearchBudgetExceeded, find_spread, regular_cliques
from .construction import PlanError, build_ft, plan_ft, verify_construction
from .graph import Graph, GraphError, complete_graph, grid, icosahedron
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .regularity import (
    certify_antipodal,
    certify_distance_regular,
    certify_edge_regular,
    certify_regular,
    certify_strongly_regular,
    is_taylor,
)
from .report import SCHEMA, certificate_record, jsonable

BUDGET_ENV = "REGCLIQUE_BUDGET"


class InputError(Exception):
    pass


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _read_graphs(paths: list[str]) -> list[tuple[str, Graph]]:
    out = []
    for path in paths or ["-"]:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise InputError(f"{path}: graph6 parse error at byte 0: truncated: empty input")
        for lineno, line in enumerate(lines, 1):
            try:
                out.append((f"{path}:{lineno}", parse_graph6(line)))
            except (Graph6Error, GraphError) as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    return out


def _builtin(name: str) -> Graph:
    kind, _, arg = name.partition(":")
    try:
        if kind == "icosahedron" and not arg:
            return icosahedron()
        if kind == "grid":
            return grid(int(arg))
        if kind == "complete":
            return complete_graph(int(arg))
    except (ValueError, GraphError) as exc:
        raise InputError(f"bad builtin {name!r}: {exc}") from exc
    raise InputError(f"unknown builtin {name!r} (expected icosahedron, grid:q or complete:n)")


def _certify_one(g: Graph, args: argparse.Namespace, budget: int) -> tuple[dict, bool]:
    select_all = not (args.srg or args.drg or args.antipodal or args.cliques or args.spread)
    props = [
        certificate_record("regular", certify_regular, g),
        certificate_record("edge_regular", certify_edge_regular, g),
    ]
    if select_all or args.srg:
        props.append(certificate_record("strongly_regular", certify_strongly_regular, g))
    if select_all or args.drg:
        rec = certificate_record("distance_regular", lambda h: str(certify_distance_regular(h)), g)
        props.append(rec)
    if select_all or args.antipodal:
        try:
            rec = certificate_record("antipodal", lambda h: certify_antipodal(h).a, g)
        except ValueError as exc:
            rec = {"property": "antipodal", "holds": False, "params": [], "witness": [], "reason": str(exc)}
        props.append(rec)
        props.append({"property": "taylor", "holds": is_taylor(g), "params": [], "witness": []})
    out: dict = {"graph6": emit_graph6(g), "n": g.n, "m": g.num_edges, "properties": props}
    ok = True
    if select_all or args.cliques:
        out["regular_cliques"] = [
            {"vertices": list(rc.vertices), "e": rc.e} for rc in regular_cliques(g, args.e)
        ]
    if args.spread:
        try:
            spread = find_spread(g, require_regular=True, e=args.e, budget=budget)
        except SearchBudgetExceeded as exc:
            out["spread"] = {"status": "budget exceeded", "budget": exc.budget}
            ok = False
        else:
            out["spread"] = (
                {"status": "none"} if spread is None
                else {"status": "found", "cliques": jsonable(spread.cliques), "nexus": list(spread.regular)}
            )
    return out, ok


def _text_certify(results: list[dict]) -> str:
    lines = []
    for res in results:
        lines.append(f"{res['source']}  n={res['n']} m={res['m']}  {res['graph6']}")
        for p in res["properties"]:
            detail = p["params"] if p["holds"] else p.get("reason", p["witness"])
            lines.append(f"  {p['property']:<17} {'yes' if p['holds'] else 'no ':<4} {detail}")
        if "regular_cliques" in res:
            lines.append(f"  regular cliques   {len(res['regular_cliques'])}")
            for rc in res["regular_cliques"]:
                lines.append(f"    e={rc['e']} {rc['vertices']}")
        if "spread" in res:
            lines.append(f"  spread            {res['spread']}")
    return "\n".join(lines)


def cmd_certify(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    results = []
    ok = True
    for source, g in _read_graphs(args.paths):
        res, good = _certify_one(g, args, budget)
        results.append({"source": source, **res})
        ok &= good
    if args.text:
        print(_text_certify(results))
    else:
        print(json.dumps({"schema": SCHEMA, "graphs": results}, indent=2))
    return 0 if ok else 1


def cmd_construct(args: argparse.Namespace) -> int:
    if Path(args.base).is_file():
        base = _read_graphs([args.base])[0][1]
    else:
        base = _builtin(args.base)
    try:
        plan = plan_ft(base, args.t)
    except PlanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    f = build_ft(plan)
    g6 = emit_graph6(f)
    report = verify_construction(plan, f)
    if args.out:
        Path(args.out).write_text(g6 + "\n")
    if args.text:
        print(g6)
        print(report.to_text())
    else:
        payload = {"schema": SCHEMA, "plan": plan.to_dict(), "graph6": g6, "report": report.to_dict()}
        print(json.dumps(payload, indent=2))
    return 0 if report.all_hold else 1


def cmd_paper_audit(args: argparse.Namespace) -> int:
    report = audit.paper_audit()
    print(report.to_text() if args.text else report.to_json())
    return 0 if report.all_hold else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regclique", description="Edge-regular graphs with regular cliques.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="certify regularity properties of graph6 input")
    p.add_argument("paths", nargs="*", help="graph6 files, one graph per line ('-' or nothing for stdin)")
    p.add_argument("--srg", action="store_true", help="strongly regular parameters")
    p.add_argument("--drg", action="store_true", help="intersection array")
    p.add_argument("--antipodal", action="store_true", help="antipodal fibres and Taylor check")
    p.add_argument("--cliques", action="store_true", help="regular-clique scan")
    p.add_argument("--spread", action="store_true", help="search for a spread of regular cliques")
    p.add_argument("--e", type=int, default=None, help="restrict cliques/spread to nexus e")
    p.add_argument("--budget", type=int, default=None,
                   help=f"spread search node budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="plain text output")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct", help="build F_t over an antipodal distance-regular base")
    p.add_argument("base", help="graph6 file, or builtin: icosahedron, grid:q, complete:n")
    p.add_argument("t", type=int, help="number of copies")
    p.add_argument("--out", help="write the constructed graph6 here")
    p.add_argument("--text", action="store_true", help="plain text output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("paper-audit", help="run every built-in claim check")
    p.add_argument("--text", action="store_true", help="plain text output")
    p.set_defaults(func=cmd_paper_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
