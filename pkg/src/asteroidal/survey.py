"""Structured sweeps over graph collections.

survey() classifies each input graph, computes its asteroidal flags, and
evaluates a set of named implication checks, streaming one JSON record
per graph plus a summary. The checks cross-validate the recognizer
routes against each other and against the clique-tree facts the
machinery rests on:

  thm1             interval theorem route == interval oracle route
  thm2             directed-path theorem route == directed-path oracle route
  thm4             rooted path  =>  no weak asteroidal quadruple
  cor_parallel     no strong triple + weak quadruple  =>  parallel quadruple
  lemma1_leaves    every clique tree: triple's connecting subtree has 3 leaves
  lemma3_leaves    every clique tree: quadruple's connecting subtree has 4 leaves
  lemma2_direction directed orientations keep strong-linked pairs on
                   directed tree paths

hunt_conjecture() scans for chordal graphs where (no strong asteroidal
triple and no weak asteroidal quadruple) disagrees with the rooted-path
oracle; any hit is reported as a research finding, not an error.

Failures always embed the counterexample certificate. Budget trips mark
the affected check or flag "unknown" and never abort the run. Output is
byte-identical across runs unless timings are requested.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field, is_dataclass, asdict, replace
from typing import Iterable, Optional

from .asteroids import (
    find_asteroidal_quadruples,
    find_asteroidal_triples,
    find_parallel_asteroidal_quadruples,
    find_strong_asteroidal_triples,
    find_weak_asteroidal_quadruples,
)
from .budgets import UNKNOWN, Budget
from .cliquetree import (
    CliqueTree,
    asteroid_subtree,
    asteroid_subtree_masks,
    directed_orientations,
    is_clique_path_tree,
)
from .graphs import Graph, GraphError, _bit_indices, chordality, is_connected, write_graph6
from .recognize import (
    ClassVerdict,
    RouteDisagreement,
    _merge_routes,
    _TreeCache,
    recognize_directed_path,
    recognize_interval,
    recognize_path,
    recognize_rooted_path,
)
from .strongpath import find_strong_path

__all__ = [
    "CHECK_NAMES",
    "SCHEMA_VERSION",
    "HuntResult",
    "SurveyRecord",
    "SurveyResult",
    "check_lemma5",
    "hunt_conjecture",
    "survey",
]

SCHEMA_VERSION = 1

CHECK_NAMES = (
    "thm1",
    "thm2",
    "thm4",
    "cor_parallel",
    "lemma1_leaves",
    "lemma3_leaves",
    "lemma2_direction",
)


@dataclass
class SurveyRecord:
    graph6: str
    n: int
    verdicts: dict
    asteroids: dict
    checks: dict
    timings: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "graph6": self.graph6,
            "n": self.n,
            "verdicts": self.verdicts,
            "asteroids": self.asteroids,
            "checks": self.checks,
        }
        if self.timings is not None:
            out["timings"] = self.timings
        return out


@dataclass
class SurveyResult:
    summary: dict
    records: list[SurveyRecord] = field(default_factory=list)
    failures: list[SurveyRecord] = field(default_factory=list)


@dataclass
class HuntResult:
    summary: dict
    candidates: list[dict] = field(default_factory=list)
    undecided: list[dict] = field(default_factory=list)


# ---------------------------------------------------------------------------
# certificate serialization


def _tree_json(t: CliqueTree) -> dict:
    out = {
        "cliques": [list(_bit_indices(m)) for m in t.clique_masks],
        "edges": [list(e) for e in t.edges],
    }
    if t.orientation is not None:
        out["orientation"] = [list(e) for e in t.orientation]
    if t.root is not None:
        out["root"] = t.root
    return out


def _cert_json(obj):
    if obj is None:
        return None
    if isinstance(obj, CliqueTree):
        return _tree_json(obj)
    if is_dataclass(obj):
        return {"kind": type(obj).__name__, **asdict(obj)}
    return str(obj)


def _verdict_json(v: ClassVerdict) -> dict:
    return {"member": v.member, "route": v.route}


# ---------------------------------------------------------------------------
# tree-side helpers for the lemma checks


def _pair_path_order(t: CliqueTree, u: int, v: int) -> list[int]:
    """The connecting path between T^u and T^v as an ordered node list.

    For two non-adjacent vertices the minimum connecting subtree is a
    path; walk it from its lower-numbered end."""
    subset, _leaves = asteroid_subtree_masks(
        t.node_adjacency(), (t.occupancy(u), t.occupancy(v))
    )
    nodes = list(_bit_indices(subset))
    if len(nodes) <= 1:
        return nodes
    adjm = t.node_adjacency()
    ends = [x for x in nodes if (adjm[x] & subset).bit_count() == 1]
    cur, prev = ends[0], -1
    order = [cur]
    while len(order) < len(nodes):
        nxt = next(w for w in _bit_indices(adjm[cur] & subset) if w != prev)
        prev, cur = cur, nxt
        order.append(cur)
    return order


def _path_is_directed(t: CliqueTree, path: list[int]) -> bool:
    oriented = set(t.orientation)
    forward = all((path[i], path[i + 1]) in oriented for i in range(len(path) - 1))
    backward = all((path[i + 1], path[i]) in oriented for i in range(len(path) - 1))
    return forward or backward


# ---------------------------------------------------------------------------
# tri-state logic: values are "yes" / "no" / "unknown"


def _tri_not(v: str) -> str:
    return {"yes": "no", "no": "yes"}.get(v, "unknown")


def _tri_and(*vs: str) -> str:
    if any(v == "no" for v in vs):
        return "no"
    if any(v == "unknown" for v in vs):
        return "unknown"
    return "yes"


def _implication(hyp: str, concl: str) -> str:
    """Check status of (hyp -> concl): pass / fail / unknown."""
    if hyp == "no" or concl == "yes":
        return "pass"
    if hyp == "yes" and concl == "no":
        return "fail"
    return "unknown"


# ---------------------------------------------------------------------------
# per-graph evaluation


def _route_pair(theorem_v: ClassVerdict, oracle_v: ClassVerdict) -> tuple[dict, ClassVerdict]:
    """Route-agreement check body plus the verdict to report."""
    if theorem_v.member != "unknown" and oracle_v.member != "unknown":
        if theorem_v.member != oracle_v.member:
            cert = {
                "theorem": {
                    "member": theorem_v.member,
                    "certificate": _cert_json(theorem_v.certificate),
                },
                "oracle": {
                    "member": oracle_v.member,
                    "certificate": _cert_json(oracle_v.certificate),
                },
            }
            return {"status": "fail", "certificate": cert}, oracle_v
        return {"status": "pass"}, _merge_routes(theorem_v, oracle_v)
    merged = _merge_routes(theorem_v, oracle_v)
    return {"status": "unknown"}, merged


def _flag_witness(found) -> tuple[str, object]:
    if found is UNKNOWN:
        return "unknown", None
    if found:
        return "yes", found[0]
    return "no", None


def _lemma_leaves_check(g, cache: _TreeCache, witnesses, want: int, budget: Budget):
    if not witnesses:
        return {"status": "pass"}
    for t in cache:
        if budget.expired():
            return {"status": "unknown"}
        for w in witnesses:
            sub, leaves = asteroid_subtree(t, w.members)
            if leaves != want:
                cert = {
                    "members": list(w.members),
                    "tree": _tree_json(t),
                    "subtree_nodes": sorted(sub),
                    "leaves": leaves,
                }
                return {"status": "fail", "certificate": cert}
    if cache.tripped:
        return {"status": "unknown"}
    return {"status": "pass"}


def _lemma2_check(g, cache: _TreeCache, directed_member: str, budget: Budget):
    if directed_member == "no":
        return {"status": "pass"}
    if directed_member == "unknown":
        return {"status": "unknown"}
    # gather, per non-adjacent pair, one oriented tree whose connecting
    # path breaks direction; only those pairs need the strong-link test
    suspects: dict[tuple[int, int], CliqueTree] = {}
    masks = g.adjacency_masks
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not masks[u] >> v & 1
    ]
    if not pairs:
        return {"status": "pass"}
    for t in cache:
        if budget.expired():
            return {"status": "unknown"}
        if not is_clique_path_tree(t):
            continue
        # the connecting path depends on the tree only, so precompute each
        # pair's signed edge sequence and test orientations against it
        edge_pos = {e: i for i, e in enumerate(t.edges)}
        sequences = []
        for (u, v) in pairs:
            if (u, v) in suspects:
                continue
            order = _pair_path_order(t, u, v)
            seq = []
            for a, b in zip(order, order[1:]):
                e = (a, b) if a < b else (b, a)
                seq.append((edge_pos[e], 1 if (a, b) == e else -1))
            sequences.append(((u, v), seq))
        for ot in directed_orientations(t):
            if budget.expired():
                return {"status": "unknown"}
            oset = set(ot.orientation)
            signs = [1 if e in oset else -1 for e in t.edges]
            for pair, seq in sequences:
                if pair in suspects:
                    continue
                vals = {signs[ei] * sgn for ei, sgn in seq}
                if len(vals) > 1:
                    suspects[pair] = ot
    if cache.tripped:
        return {"status": "unknown"}
    undecided = False
    for (u, v), ot in sorted(suspects.items()):
        witness = find_strong_path(g, u, v, budget)
        if witness is UNKNOWN:
            undecided = True
            continue
        if witness is not None:
            cert = {
                "pair": [u, v],
                "tree": _tree_json(ot),
                "witness": _cert_json(witness),
            }
            return {"status": "fail", "certificate": cert}
    return {"status": "unknown"} if undecided else {"status": "pass"}


def _survey_one(g: Graph, checks: tuple[str, ...], budget: Budget, with_timings: bool) -> SurveyRecord:
    timings: dict[str, float] = {}

    def stamp(name, t0):
        if with_timings:
            timings[name] = round(time.monotonic() - t0, 6)

    b = replace(budget, deadline=None).started()  # wall clock restarts per graph
    t0 = time.monotonic()
    chordal_member = "yes" if chordality(g).hole is None else "no"
    cache = _TreeCache(g, b.tree_limit)
    vt_int = recognize_interval(g, "theorem", b)
    vo_int = recognize_interval(g, "oracle", b, _cache=cache)
    vt_dir = recognize_directed_path(g, "theorem", b)
    vo_dir = recognize_directed_path(g, "oracle", b, _cache=cache)
    v_rooted = recognize_rooted_path(g, b, _cache=cache)
    v_path = recognize_path(g, b, _cache=cache)
    thm1_body, v_int = _route_pair(vt_int, vo_int)
    thm2_body, v_dir = _route_pair(vt_dir, vo_dir)
    verdicts = {
        "chordal": {"member": chordal_member, "route": "theorem"},
        "interval": _verdict_json(v_int),
        "rooted_path": _verdict_json(v_rooted),
        "directed_path": _verdict_json(v_dir),
        "path": _verdict_json(v_path),
    }
    stamp("classify", t0)

    t0 = time.monotonic()
    ats = find_asteroidal_triples(g)
    quads = find_asteroidal_quadruples(g)
    strong, _ = _flag_witness(find_strong_asteroidal_triples(g, b))
    weak, weak_wit = _flag_witness(find_weak_asteroidal_quadruples(g, b))
    parallel, parallel_wit = _flag_witness(find_parallel_asteroidal_quadruples(g, b))
    asteroids = {
        "at": "yes" if ats else "no",
        "strong_at": strong,
        "quad": "yes" if quads else "no",
        "weak_quad": weak,
        "parallel_quad": parallel,
    }
    stamp("asteroids", t0)

    bodies: dict[str, dict] = {}
    for name in checks:
        t0 = time.monotonic()
        if name == "thm1":
            bodies[name] = thm1_body
        elif name == "thm2":
            bodies[name] = thm2_body
        elif name == "thm4":
            status = _implication(v_rooted.member, _tri_not(weak))
            body = {"status": status}
            if status == "fail":
                body["certificate"] = {
                    "rooted_tree": _cert_json(v_rooted.certificate),
                    "weak_quadruple": _cert_json(weak_wit),
                }
            bodies[name] = body
        elif name == "cor_parallel":
            hyp = _tri_and(_tri_not(strong), weak)
            status = _implication(hyp, parallel)
            body = {"status": status}
            if status == "fail":
                body["certificate"] = {
                    "weak_quadruple": _cert_json(weak_wit),
                    "parallel_search": "exhausted without a hit",
                }
            bodies[name] = body
        elif name == "lemma1_leaves":
            if chordal_member == "no":
                bodies[name] = {"status": "pass"}
            else:
                bodies[name] = _lemma_leaves_check(g, cache, ats, 3, b)
        elif name == "lemma3_leaves":
            if chordal_member == "no":
                bodies[name] = {"status": "pass"}
            else:
                bodies[name] = _lemma_leaves_check(g, cache, quads, 4, b)
        elif name == "lemma2_direction":
            if chordal_member == "no":
                bodies[name] = {"status": "pass"}
            else:
                bodies[name] = _lemma2_check(g, cache, v_dir.member, b)
        stamp(name, t0)

    return SurveyRecord(
        graph6=write_graph6(g),
        n=g.n,
        verdicts=verdicts,
        asteroids=asteroids,
        checks=bodies,
        timings=timings if with_timings else None,
    )


def survey(
    graphs: Iterable[Graph],
    checks: Iterable[str] = CHECK_NAMES,
    budget: Optional[Budget] = None,
    report: Optional[str] = None,
    with_timings: bool = False,
    keep_records: bool = True,
) -> SurveyResult:
    """Evaluate the named checks over every input graph, in input order.

    Every graph must be connected (census entries are). One record per
    graph is written to `report` as a JSON line when given; the summary
    goes to `report` + ".summary.json". The wall budget restarts for each
    graph. Records with a failing check are always retained in
    .failures; keep_records=False drops passing records to bound memory
    on large sweeps.
    """
    checks = tuple(checks)
    for name in checks:
        if name not in CHECK_NAMES:
            raise GraphError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    template = budget if budget is not None else Budget()
    counts = {name: {"pass": 0, "fail": 0, "unknown": 0} for name in checks}
    result = SurveyResult(summary={})
    total = 0
    fh = open(report, "w", encoding="ascii") if report else None
    try:
        for g in graphs:
            if not is_connected(g):
                raise GraphError("survey inputs must be connected graphs")
            rec = _survey_one(g, checks, template, with_timings)
            total += 1
            failed = False
            for name in checks:
                counts[name][rec.checks[name]["status"]] += 1
                failed = failed or rec.checks[name]["status"] == "fail"
            if failed:
                result.failures.append(rec)
            if keep_records:
                result.records.append(rec)
            if fh:
                fh.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
    finally:
        if fh:
            fh.close()
    result.summary = {
        "schema": SCHEMA_VERSION,
        "graphs": total,
        "checks": counts,
    }
    if report:
        with open(report + ".summary.json", "w", encoding="ascii") as sf:
            json.dump(result.summary, sf, indent=2, sort_keys=False)
            sf.write("\n")
    return result


# ---------------------------------------------------------------------------
# conjecture hunting


def hunt_conjecture(
    graphs: Iterable[Graph],
    budget: Optional[Budget] = None,
    report: Optional[str] = None,
) -> HuntResult:
    """Scan chordal inputs for disagreement between (no strong asteroidal
    triple and no weak asteroidal quadruple) and the rooted-path oracle.

    Candidates are research findings, reported with certificates, never
    raised as errors. Budget-starved graphs land in .undecided.
    Non-chordal inputs are counted and skipped.
    """
    template = budget if budget is not None else Budget()
    result = HuntResult(summary={})
    scanned = 0
    skipped = 0
    for g in graphs:
        scanned += 1
        b = replace(template, deadline=None).started()
        if chordality(g).hole is not None:
            skipped += 1
            continue
        rooted = recognize_rooted_path(g, b)
        strong, strong_wit = _flag_witness(find_strong_asteroidal_triples(g, b))
        weak, weak_wit = _flag_witness(find_weak_asteroidal_quadruples(g, b))
        conditions = _tri_and(_tri_not(strong), _tri_not(weak))
        entry = {
            "schema": SCHEMA_VERSION,
            "graph6": write_graph6(g),
            "n": g.n,
            "conditions": {"strong_at": strong, "weak_quad": weak},
            "rooted": rooted.member,
        }
        if conditions == "unknown" or rooted.member == "unknown":
            entry["kind"] = "undecided"
            result.undecided.append(entry)
        elif conditions != rooted.member:
            entry["kind"] = "candidate"
            entry["certificates"] = {
                "strong_at": _cert_json(strong_wit),
                "weak_quad": _cert_json(weak_wit),
                "rooted": _cert_json(rooted.certificate),
            }
            result.candidates.append(entry)
    result.summary = {
        "schema": SCHEMA_VERSION,
        "scanned": scanned,
        "skipped_not_chordal": skipped,
        "candidates": len(result.candidates),
        "undecided": len(result.undecided),
    }
    if report:
        with open(report, "w", encoding="ascii") as fh:
            for entry in result.candidates + result.undecided:
                fh.write(json.dumps(entry, separators=(",", ":")) + "\n")
        with open(report + ".summary.json", "w", encoding="ascii") as sf:
            json.dump(result.summary, sf, indent=2, sort_keys=False)
            sf.write("\n")
    return result


# ---------------------------------------------------------------------------
# the four-vertex edge-spread fact


def check_lemma5() -> bool:
    """Brute force over all 64 labeled graphs on four vertices: whenever
    every three-vertex subset spans at least one edge, the graph has a
    triangle or two disjoint edges."""
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(1 << 6):
        edges = [pairs[k] for k in range(6) if mask >> k & 1]
        has = {p: False for p in pairs}
        for e in edges:
            has[e] = True

        def edge(a, b):
            return has[(a, b) if a < b else (b, a)]

        hypothesis = all(
            any(edge(a, b) for a, b in itertools.combinations(trip, 2))
            for trip in itertools.combinations(range(4), 3)
        )
        if not hypothesis:
            continue
        triangle = any(
            edge(a, b) and edge(a, c) and edge(b, c)
            for a, b, c in itertools.combinations(range(4), 3)
        )
        disjoint = any(
            edge(*e1) and edge(*e2)
            for e1, e2 in itertools.combinations(pairs, 2)
            if not set(e1) & set(e2)
        )
        if not (triangle or disjoint):
            return False
    return True
