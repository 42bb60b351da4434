"""Recognizers for the nested graph classes.

interval < rooted path < directed path < path < chordal

Interval and directed-path membership each have two independent routes: a
theorem route deciding through an asteroidal predicate (no triple, no
strong triple) and an oracle route searching clique trees exhaustively.
The routes must agree wherever both decide; "both" runs them and raises
RouteDisagreement otherwise. Path and rooted-path membership have only the
oracle route. Verdicts carry re-checkable certificates: a clique tree
(oriented or rooted as appropriate) on yes, an obstruction witness or an
exhaustion record on no.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .asteroids import find_asteroidal_triples, find_strong_asteroidal_triples
from .budgets import UNKNOWN, Budget
from .cliquetree import (
    CliqueTree,
    TreeBudgetExceeded,
    enumerate_clique_trees,
    is_clique_path,
    is_clique_path_tree,
    orient_directed,
    orient_rooted,
)
from .graphs import (
    ChordalityWitness,
    Graph,
    GraphError,
    chordality,
    component_masks,
    maximal_clique_masks,
)

__all__ = [
    "CLASS_CHAIN",
    "ClassVerdict",
    "ExhaustionCertificate",
    "RouteDisagreement",
    "classify",
    "recognize_interval",
    "recognize_path",
    "recognize_directed_path",
    "recognize_rooted_path",
]

# narrowest first; membership lower in the chain implies membership higher
CLASS_CHAIN = ("interval", "rooted_path", "directed_path", "path", "chordal")


class RouteDisagreement(Exception):
    """The theorem and oracle routes decided differently on one graph."""

    def __init__(self, theorem_verdict: "ClassVerdict", oracle_verdict: "ClassVerdict"):
        self.theorem_verdict = theorem_verdict
        self.oracle_verdict = oracle_verdict
        super().__init__(
            f"{theorem_verdict.graph_class}: theorem route says "
            f"{theorem_verdict.member}, oracle route says {oracle_verdict.member}"
        )


@dataclass(frozen=True)
class ExhaustionCertificate:
    """Proof-of-work record for an oracle-route no: the whole search space
    was enumerated without a hit. checked counts trees (or orderings for
    the interval route); component is set when the graph was disconnected
    and names the vertices of the deciding component."""

    mode: str
    checked: int
    component: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class ClassVerdict:
    """Membership verdict for one class.

    member is "yes", "no", or "unknown" (budget ran out before a
    decision). certificate is a CliqueTree on oracle yes, an obstruction
    witness (hole, asteroidal triple, strong triple) on theorem no, an
    ExhaustionCertificate on oracle no, and None on theorem yes, unknown,
    or a disconnected-input oracle yes.
    """

    graph_class: str
    member: str
    route: str
    certificate: object = None


class _TreeCache:
    """Memoized clique-tree enumeration shared across oracle routes."""

    def __init__(self, g: Graph, limit: int):
        self._gen = enumerate_clique_trees(g, limit=limit)
        self.found: list[CliqueTree] = []
        self.complete = False
        self.tripped = False

    def __iter__(self):
        i = 0
        while True:
            while i < len(self.found):
                yield self.found[i]
                i += 1
            if self.complete or self.tripped:
                return
            try:
                self.found.append(next(self._gen))
            except StopIteration:
                self.complete = True
            except TreeBudgetExceeded:
                self.tripped = True


def _chordal_gate(g: Graph, graph_class: str, route: str) -> tuple[Optional[ChordalityWitness], Optional[ClassVerdict]]:
    wit = chordality(g)
    if wit.hole is not None:
        return wit, ClassVerdict(graph_class, "no", route, wit)
    return wit, None


def _clique_path_ordering(clique_masks, budget: Budget):
    """Search for an ordering of the maximal cliques in which every
    vertex's cliques are consecutive; such an ordering is exactly a clique
    tree that is a path.

    Returns (ordering, examined) on success, (None, examined) on
    exhaustion, (UNKNOWN, examined) on a budget trip. Deterministic:
    cliques are tried in index order.
    """
    k = len(clique_masks)
    if k <= 1:
        return list(range(k)), 1
    examined = 0
    limit = budget.tree_limit

    def extend(order, remaining, started, prev):
        nonlocal examined
        if not remaining:
            return list(order)
        examined += 1
        if examined > limit or budget.expired():
            return UNKNOWN
        for idx in list(remaining):
            m = clique_masks[idx]
            # a vertex seen before may only continue from the previous
            # clique; anything else breaks consecutiveness
            if m & started & ~prev:
                continue
            remaining.discard(idx)
            order.append(idx)
            got = extend(order, remaining, started | m, m)
            if got is not None:
                return got
            order.pop()
            remaining.add(idx)
        return None

    return extend([], set(range(k)), 0, 0), examined


def _induced_components(g: Graph):
    full = (1 << g.n) - 1
    for cmask in component_masks(g.adjacency_masks, full):
        keep = [v for v in range(g.n) if cmask >> v & 1]
        sub, _labels = g.induced(keep)
        yield sub, tuple(keep)


def _combine_components(g: Graph, graph_class: str, route: str, recognize_one):
    """Per-component membership, combined: member iff every component is.

    Certificates cannot straddle components, so the combined yes carries
    none; a no carries the failing component's certificate tagged with its
    vertices when it is an exhaustion record (obstruction witnesses would
    name component-local vertices, so they are dropped too).
    """
    worst = "yes"
    for sub, keep in _induced_components(g):
        v = recognize_one(sub)
        if v.member == "no":
            cert = v.certificate
            if isinstance(cert, ExhaustionCertificate):
                cert = ExhaustionCertificate(cert.mode, cert.checked, component=keep)
            else:
                cert = ExhaustionCertificate("component", 0, component=keep)
            return ClassVerdict(graph_class, "no", route, cert)
        if v.member == "unknown":
            worst = "unknown"
    return ClassVerdict(graph_class, worst, route)


def _is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g.adjacency_masks, (1 << g.n) - 1)) == 1


def _merge_routes(theorem_v: ClassVerdict, oracle_v: ClassVerdict) -> ClassVerdict:
    if (
        theorem_v.member != "unknown"
        and oracle_v.member != "unknown"
        and theorem_v.member != oracle_v.member
    ):
        raise RouteDisagreement(theorem_v, oracle_v)
    if oracle_v.member == "yes":
        return oracle_v  # constructive certificate wins
    if theorem_v.member != "unknown":
        return theorem_v  # obstruction witness beats exhaustion record
    return oracle_v


def recognize_interval(
    g: Graph,
    route: str = "theorem",
    budget: Optional[Budget] = None,
    *,
    _cache: Optional[_TreeCache] = None,
) -> ClassVerdict:
    """Interval membership: chordal with no asteroidal triple (theorem
    route), or some clique tree is a path (oracle route, searched as a
    consecutive-cliques ordering)."""
    if route == "both":
        b = (budget if budget is not None else Budget()).started()
        return _merge_routes(
            recognize_interval(g, "theorem", b),
            recognize_interval(g, "oracle", b, _cache=_cache),
        )
    if route not in ("theorem", "oracle"):
        raise GraphError(f"unknown route {route!r}")
    b = (budget if budget is not None else Budget()).started()
    if g.n == 0:
        return ClassVerdict("interval", "yes", route)
    wit, bad = _chordal_gate(g, "interval", route)
    if bad is not None:
        return bad
    if route == "theorem":
        triples = find_asteroidal_triples(g)
        if triples:
            return ClassVerdict("interval", "no", "theorem", triples[0])
        return ClassVerdict("interval", "yes", "theorem")
    if not _is_connected(g):
        return _combine_components(
            g, "interval", "oracle", lambda sub: recognize_interval(sub, "oracle", b)
        )
    cliques = maximal_clique_masks(g.adjacency_masks, wit.peo)
    order, examined = _clique_path_ordering(cliques, b)
    if order is UNKNOWN:
        return ClassVerdict("interval", "unknown", "oracle")
    if order is None:
        cert = ExhaustionCertificate("clique-path-ordering", examined)
        return ClassVerdict("interval", "no", "oracle", cert)
    edges = [(order[i], order[i + 1]) for i in range(len(order) - 1)]
    tree = CliqueTree(g.n, cliques, edges)
    assert is_clique_path(tree) and tree.validate(g)
    return ClassVerdict("interval", "yes", "oracle", tree)


def _oracle_tree_search(
    g: Graph,
    graph_class: str,
    hit,
    mode: str,
    budget: Budget,
    cache: Optional[_TreeCache],
) -> ClassVerdict:
    """Shared oracle loop: scan clique trees for one that `hit` accepts."""
    if g.n == 0:
        return ClassVerdict(graph_class, "yes", "oracle")
    wit, bad = _chordal_gate(g, graph_class, "oracle")
    if bad is not None:
        return bad
    if not _is_connected(g):
        return _combine_components(
            g,
            graph_class,
            "oracle",
            lambda sub: _oracle_tree_search(sub, graph_class, hit, mode, budget, None),
        )
    cache = cache if cache is not None else _TreeCache(g, budget.tree_limit)
    checked = 0
    for t in cache:
        if budget.expired():
            return ClassVerdict(graph_class, "unknown", "oracle")
        checked += 1
        got = hit(t)
        if got is not None:
            assert got.validate(g)
            return ClassVerdict(graph_class, "yes", "oracle", got)
    if cache.tripped:
        return ClassVerdict(graph_class, "unknown", "oracle")
    cert = ExhaustionCertificate(mode, checked)
    return ClassVerdict(graph_class, "no", "oracle", cert)


def recognize_path(
    g: Graph,
    budget: Optional[Budget] = None,
    *,
    _cache: Optional[_TreeCache] = None,
) -> ClassVerdict:
    """Path membership: some clique tree is a clique path tree, meaning a
    path in which every vertex occupies a subpath."""
    b = (budget if budget is not None else Budget()).started()
    return _oracle_tree_search(
        g,
        "path",
        lambda t: t if is_clique_path_tree(t) else None,
        "clique-path-tree",
        b,
        _cache,
    )


def recognize_directed_path(
    g: Graph,
    route: str = "theorem",
    budget: Optional[Budget] = None,
    *,
    _cache: Optional[_TreeCache] = None,
) -> ClassVerdict:
    """Directed-path membership: chordal with no strong asteroidal triple
    (theorem route), or some clique tree admits a directed orientation
    (oracle route)."""
    if route == "both":
        b = (budget if budget is not None else Budget()).started()
        return _merge_routes(
            recognize_directed_path(g, "theorem", b),
            recognize_directed_path(g, "oracle", b, _cache=_cache),
        )
    if route not in ("theorem", "oracle"):
        raise GraphError(f"unknown route {route!r}")
    b = (budget if budget is not None else Budget()).started()
    if route == "theorem":
        if g.n == 0:
            return ClassVerdict("directed_path", "yes", "theorem")
        wit, bad = _chordal_gate(g, "directed_path", "theorem")
        if bad is not None:
            return bad
        strong = find_strong_asteroidal_triples(g, b)
        if strong is UNKNOWN:
            return ClassVerdict("directed_path", "unknown", "theorem")
        if strong:
            return ClassVerdict("directed_path", "no", "theorem", strong[0])
        return ClassVerdict("directed_path", "yes", "theorem")
    # orientation only makes sense for trees whose vertex subtrees are paths,
    # and any witnessing tree has that property anyway
    return _oracle_tree_search(
        g,
        "directed_path",
        lambda t: orient_directed(t) if is_clique_path_tree(t) else None,
        "directed-orientation",
        b,
        _cache,
    )


def recognize_rooted_path(
    g: Graph,
    budget: Optional[Budget] = None,
    *,
    _cache: Optional[_TreeCache] = None,
) -> ClassVerdict:
    """Rooted-path membership: some clique tree admits an orientation with
    every edge pointing away from one root while every vertex subtree stays
    a directed path."""
    b = (budget if budget is not None else Budget()).started()
    return _oracle_tree_search(
        g,
        "rooted_path",
        lambda t: orient_rooted(t) if is_clique_path_tree(t) else None,
        "rooted-orientation",
        b,
        _cache,
    )


def _chain_consistent(verdicts: dict[str, ClassVerdict]) -> bool:
    decided = [
        verdicts[c].member for c in CLASS_CHAIN if verdicts[c].member != "unknown"
    ]
    # once the chain says yes it must keep saying yes upward
    return "".join("y" if m == "yes" else "n" for m in decided).count("yn") == 0


def classify(g: Graph, budget: Optional[Budget] = None) -> dict[str, ClassVerdict]:
    """Verdicts for chordal plus all four subclasses, keyed by class name.

    Interval and directed-path run both routes (disagreement raises); the
    oracle routes share one clique-tree enumeration. The result is checked
    for chain monotonicity before being returned.
    """
    b = (budget if budget is not None else Budget()).started()
    out: dict[str, ClassVerdict] = {}
    if g.n == 0:
        return {c: ClassVerdict(c, "yes", "theorem") for c in CLASS_CHAIN}
    wit = chordality(g)
    if wit.hole is not None:
        return {
            c: ClassVerdict(c, "no", "theorem", wit) for c in CLASS_CHAIN
        }
    out["chordal"] = ClassVerdict("chordal", "yes", "theorem", wit)
    cache = _TreeCache(g, b.tree_limit) if _is_connected(g) else None
    out["interval"] = recognize_interval(g, "both", b, _cache=cache)
    out["rooted_path"] = recognize_rooted_path(g, b, _cache=cache)
    out["directed_path"] = recognize_directed_path(g, "both", b, _cache=cache)
    out["path"] = recognize_path(g, b, _cache=cache)
    assert _chain_consistent(out), out
    return out
