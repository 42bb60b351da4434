"""Command-line surface: recognizers, asteroid finders, family generators,
surveys, the conjecture hunt, and DOT export.

Inputs are graph files, either graph6 (one graph per line, '>' comments
skipped) or an edge list ('n m' header then 'u v' lines); the format is
sniffed from the first significant line. `-` reads stdin.

Exit codes: 0 success, 1 check failure found, 2 input error, 3 every
verdict unknown (budget starvation).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .budgets import UNKNOWN, Budget
from .asteroids import (
    find_asteroidal_quadruples,
    find_asteroidal_triples,
    find_parallel_asteroidal_quadruples,
    find_strong_asteroidal_triples,
    find_weak_asteroidal_quadruples,
)
from .cliquetree import build_clique_tree, to_dot
from .families import FamilySpec, generate
from .graphs import (
    Graph,
    GraphError,
    chordality,
    iter_graph6_lines,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .recognize import (
    RouteDisagreement,
    classify,
    recognize_directed_path,
    recognize_interval,
    recognize_path,
    recognize_rooted_path,
)
from .survey import CHECK_NAMES, _cert_json, hunt_conjecture, survey

_RECOGNIZERS = {
    "interval": recognize_interval,
    "path": recognize_path,
    "directed-path": recognize_directed_path,
    "rooted-path": recognize_rooted_path,
}

_FINDERS = {
    "at": find_asteroidal_triples,
    "quad": find_asteroidal_quadruples,
    "strong-at": find_strong_asteroidal_triples,
    "weak-quad": find_weak_asteroidal_quadruples,
    "parallel-quad": find_parallel_asteroidal_quadruples,
}

# short check names accepted on the command line
_CHECK_ALIASES = {
    "cor": "cor_parallel",
    "lemma1": "lemma1_leaves",
    "lemma2": "lemma2_direction",
    "lemma3": "lemma3_leaves",
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _read_graphs(path: str) -> list[Graph]:
    """Parse a graph file: an 'n m' header means one edge-list graph,
    anything else is treated as graph6 lines."""
    text = _read_text(path)
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith(">"):
            continue
        toks = ln.split()
        if len(toks) == 2 and all(t.isdigit() for t in toks):
            return [parse_edge_list(text)]
        break
    graphs = []
    for lineno, ln in iter_graph6_lines(text):
        try:
            graphs.append(parse_graph6(ln))
        except GraphError as e:
            raise GraphError(f"{path} line {lineno}: {e}") from None
    if not graphs:
        raise GraphError(f"no graphs found in {path}")
    return graphs


def _budget(args: argparse.Namespace) -> Optional[Budget]:
    fields = {
        "tree_limit": args.tree_limit,
        "path_limit": args.path_limit,
        "max_t": args.max_t,
        "time_budget_ms": args.time_budget_ms,
    }
    given = {k: v for k, v in fields.items() if v is not None}
    return Budget(**given) if given else None


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tree-limit", type=int, default=None, metavar="N")
    p.add_argument("--path-limit", type=int, default=None, metavar="N")
    p.add_argument("--max-t", type=int, default=None, metavar="T")
    p.add_argument("--time-budget-ms", type=int, default=None, metavar="MS")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_recognize(args: argparse.Namespace) -> int:
    budget = _budget(args)
    members = []
    failed = False
    for g in _read_graphs(args.file):
        if args.graph_class == "chordal":
            w = chordality(g)
            member = "yes" if w.hole is None else "no"
            record = {"graph6": write_graph6(g), "class": "chordal",
                      "route": "theorem", "member": member}
            if args.witness:
                record["certificate"] = _cert_json(w)
        else:
            fn = _RECOGNIZERS[args.graph_class]
            oracle_only = args.graph_class in ("path", "rooted-path")
            if oracle_only and args.route == "theorem":
                raise GraphError(
                    f"{args.graph_class} has no theorem route; use oracle"
                )
            try:
                if oracle_only:
                    v = fn(g, budget=budget)
                else:
                    v = fn(g, route=args.route, budget=budget)
            except RouteDisagreement as e:
                _emit({"graph6": write_graph6(g), "class": args.graph_class,
                       "route": "both", "member": "disagreement",
                       "error": str(e)})
                failed = True
                members.append("disagreement")
                continue
            record = {"graph6": write_graph6(g), "class": v.graph_class,
                      "route": v.route, "member": v.member}
            if args.witness:
                record["certificate"] = _cert_json(v.certificate)
            member = v.member
        _emit(record)
        members.append(member)
    if failed:
        return 1
    if members and all(m == "unknown" for m in members):
        return 3
    return 0


def cmd_asteroids(args: argparse.Namespace) -> int:
    budget = _budget(args)
    founds = []
    for g in _read_graphs(args.file):
        fn = _FINDERS[args.mode]
        found = fn(g) if args.mode in ("at", "quad") else fn(g, budget=budget)
        if found is UNKNOWN:
            record = {"graph6": write_graph6(g), "mode": args.mode,
                      "found": "unknown", "count": None}
        else:
            record = {"graph6": write_graph6(g), "mode": args.mode,
                      "found": "yes" if found else "no", "count": len(found)}
            if args.witness:
                record["witnesses"] = [_cert_json(w) for w in found]
        _emit(record)
        founds.append(record["found"])
    if founds and all(f == "unknown" for f in founds):
        return 3
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(family=args.family, k=args.k, legs=args.legs,
                      leg_length=args.leg_length, ell=args.ell)
    g = generate(spec)
    out = write_edge_list(g) if args.format == "edges" else write_graph6(g) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _resolve_checks(raw: str) -> tuple[str, ...]:
    names = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        name = _CHECK_ALIASES.get(tok, tok)
        if name not in CHECK_NAMES:
            raise GraphError(f"unknown check {tok!r}")
        if name not in names:
            names.append(name)
    if not names:
        raise GraphError("empty check list")
    return tuple(names)


def cmd_survey(args: argparse.Namespace) -> int:
    checks = _resolve_checks(args.checks)
    result = survey(
        _read_graphs(args.file),
        checks=checks,
        budget=_budget(args),
        report=args.report,
        with_timings=args.timings,
        keep_records=False,
    )
    print(json.dumps(result.summary, indent=2))
    counts = result.summary["checks"].values()
    if any(c["fail"] for c in counts):
        return 1
    # a requested check that decided nothing means the run was starved
    if any(c["unknown"] and not c["pass"] for c in counts):
        return 3
    return 0


def cmd_hunt(args: argparse.Namespace) -> int:
    result = hunt_conjecture(
        _read_graphs(args.file), budget=_budget(args), report=args.report
    )
    # candidates are findings, not errors: report them and exit 0
    for entry in result.candidates:
        _emit(entry)
    print(json.dumps(result.summary, indent=2))
    s = result.summary
    examined = s["scanned"] - s["skipped_not_chordal"]
    if examined and s["undecided"] == examined:
        return 3
    return 0


def _witness_paths(w) -> list[tuple[int, ...]]:
    """Vertex sequences a witness draws in the graph, for highlighting."""
    if w is None:
        return []
    if getattr(w, "hole", None) is not None:
        return [tuple(w.hole) + (w.hole[0],)]
    paths = [p.path for p in getattr(w, "proofs", ())]
    base = getattr(w, "base", None)
    if base is not None:
        paths.extend(p.path for p in base.proofs)
    for link in getattr(w, "links", ()):
        if link.common_neighbor is not None:
            paths.append((link.u, link.common_neighbor, link.v))
        else:
            paths.append((link.u, *link.x_interior, link.v))
            paths.append((link.u, *link.y_interior, link.v))
    return paths


def _graph_dot(g: Graph, w, caption: str) -> str:
    marked = set(getattr(w, "members", ()) or ())
    if getattr(w, "hole", None) is not None:
        marked = set(w.hole)
    bold = set()
    for p in _witness_paths(w):
        bold.update((a, b) if a < b else (b, a) for a, b in zip(p, p[1:]))
    lines = [f"// {caption}", "graph g {"]
    for v in range(g.n):
        extra = " [peripheries=2]" if v in marked else ""
        lines.append(f"  v{v}{extra};")
    for (a, b) in g.edges():
        style = ' [penwidth=2]' if (a, b) in bold else ""
        lines.append(f"  v{a} -- v{b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = _read_graphs(args.file)[0]
    if args.what == "clique-tree":
        out = to_dot(build_clique_tree(g))
    else:
        verdicts = classify(g, budget=_budget(args))
        out = None
        for cls in ("chordal", "interval", "directed_path"):
            v = verdicts[cls]
            if v.member == "no" and _witness_paths(v.certificate):
                out = _graph_dot(g, v.certificate,
                                 f"obstruction witness: not {cls}")
                break
        if out is None:
            out = _graph_dot(g, None, "no structural obstruction found")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asteroidal",
        description="chordal-graph structure toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="class membership with certificates")
    p.add_argument("--class", dest="graph_class", required=True,
                   choices=("chordal", "interval", "path", "directed-path",
                            "rooted-path"))
    p.add_argument("--route", default="both",
                   choices=("theorem", "oracle", "both"))
    p.add_argument("--witness", action="store_true",
                   help="include the certificate in the output")
    _add_budget_flags(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("asteroids", help="find asteroidal sets")
    p.add_argument("--mode", required=True,
                   choices=("at", "quad", "strong-at", "weak-quad",
                            "parallel-quad"))
    p.add_argument("--witness", action="store_true")
    _add_budget_flags(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_asteroids)

    p = sub.add_parser("gen", help="emit a named family member")
    p.add_argument("--family", required=True,
                   choices=("sun", "spider", "f23", "gadget"))
    p.add_argument("--k", type=int, default=None, help="sun size")
    p.add_argument("--legs", type=int, default=None, help="spider legs")
    p.add_argument("--leg-length", type=int, default=2)
    p.add_argument("--ell", type=int, default=1, help="gadget connector length")
    p.add_argument("--format", default="g6", choices=("g6", "edges"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("survey", help="run named checks over a graph file")
    p.add_argument("--checks", default=",".join(CHECK_NAMES),
                   help="comma list: thm1,thm2,thm4,cor,lemma1,lemma2,lemma3")
    p.add_argument("--report", default=None, metavar="OUT.jsonl")
    p.add_argument("--timings", action="store_true")
    _add_budget_flags(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("hunt", help="scan for conjecture counterexamples")
    p.add_argument("--report", default=None, metavar="OUT.jsonl")
    _add_budget_flags(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("export-dot", help="DOT of a clique tree or witness")
    p.add_argument("--what", required=True, choices=("clique-tree", "witness"))
    p.add_argument("--out", default=None)
    _add_budget_flags(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
