"""Clique trees of connected chordal graphs.

A clique tree is a tree whose nodes are the maximal cliques of the graph such
that, for every vertex v, the cliques containing v induce a connected subtree
(written T^v). Each tree edge carries the label Q intersect Q', which is
always a minimal separator of the graph; the multiset of labels is the same
in every clique tree, and the number of edges carrying a fixed label s equals
c - 1, where c counts the components of G minus s holding a vertex complete
to s.

The module builds one deterministic clique tree, enumerates all of them
(spanning trees of the nonempty-intersection clique graph, filtered by the
subtree property), and decides the orientation questions that characterize
the interval / path / directed path / rooted path hierarchy:

  * the tree itself is a path                      -> clique path
  * every T^v is a path                            -> clique path tree
  * an edge orientation makes every T^v directed   -> clique directed path tree
  * additionally all edges point away from a root  -> clique rooted path tree

Everything is exhaustive search with explicit budgets; a tripped budget is a
distinguished signal (`TreeBudgetExceeded`), never a silent truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .graphs import (
    Graph,
    GraphError,
    _bit_indices,
    component_masks,
    is_connected,
    maximal_clique_masks,
    require_chordal,
)

DEFAULT_TREE_LIMIT = 10**6


class CliqueTreeError(GraphError):
    """Precondition failure in clique-tree operations."""


class TreeBudgetExceeded(Exception):
    """Spanning-tree enumeration hit its budget before finishing.

    `examined` counts the spanning trees inspected (including those that
    failed the clique-tree filter); whatever was yielded before the signal
    is a correct but possibly incomplete enumeration.
    """

    def __init__(self, examined: int):
        super().__init__(f"clique-tree enumeration budget hit after {examined} spanning trees")
        self.examined = examined


@dataclass(frozen=True)
class Separator:
    """A clique-tree edge label with its multiplicity (c - 1)."""

    vertices: frozenset[int]
    multiplicity: int


class CliqueTree:
    """Tree over the maximal cliques of a chordal graph.

    `cliques` is the fixed node indexing (tuple of frozensets), `edges` a
    tuple of index pairs (i, j) with i < j. `orientation`, when present, is a
    tuple aligned with `edges` holding (tail, head) pairs; `root`, when
    present, names the node all edges point away from. Instances are treated
    as immutable values.
    """

    __slots__ = ("n", "clique_masks", "edges", "orientation", "root", "_labels", "_adj")

    def __init__(
        self,
        n: int,
        clique_masks: Sequence[int],
        edges: Sequence[tuple[int, int]],
        orientation: Optional[Sequence[tuple[int, int]]] = None,
        root: Optional[int] = None,
    ):
        self.n = n
        self.clique_masks = tuple(clique_masks)
        self.edges = tuple(tuple(sorted(e)) for e in edges)
        self.orientation = None if orientation is None else tuple(orientation)
        self.root = root
        self._labels = None
        self._adj = None

    @property
    def k(self) -> int:
        return len(self.clique_masks)

    @property
    def cliques(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bit_indices(c)) for c in self.clique_masks)

    @property
    def label_masks(self) -> tuple[int, ...]:
        if self._labels is None:
            cm = self.clique_masks
            self._labels = tuple(cm[i] & cm[j] for i, j in self.edges)
        return self._labels

    def labels(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bit_indices(s)) for s in self.label_masks)

    def node_adjacency(self) -> tuple[int, ...]:
        """Per-node bitmask of tree neighbors."""
        if self._adj is None:
            adj = [0] * self.k
            for i, j in self.edges:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            self._adj = tuple(adj)
        return self._adj

    def occupancy(self, v: int) -> int:
        """Bitmask of nodes whose clique contains v."""
        occ = 0
        for idx, c in enumerate(self.clique_masks):
            if c >> v & 1:
                occ |= 1 << idx
        return occ

    def with_orientation(
        self, orientation: Sequence[tuple[int, int]], root: Optional[int] = None
    ) -> "CliqueTree":
        return CliqueTree(self.n, self.clique_masks, self.edges, orientation, root)

    def validate(self, g: Graph) -> bool:
        """Full re-check: nodes are exactly the maximal cliques of g, edges
        form a tree, every T^v is connected, labels match intersections, and
        any orientation/root is structurally consistent."""
        try:
            expected = maximal_clique_masks(g.adjacency_masks, require_chordal(g))
        except GraphError:
            return False
        if sorted(self.clique_masks) != sorted(expected):
            return False
        if not _edges_form_tree(self.k, self.edges):
            return False
        for v in range(self.n):
            occ = self.occupancy(v)
            if occ and not _nodes_connected(self.node_adjacency(), occ):
                return False
        for (i, j), lbl in zip(self.edges, self.label_masks):
            if lbl != self.clique_masks[i] & self.clique_masks[j]:
                return False
        if self.orientation is not None:
            if sorted(tuple(sorted(e)) for e in self.orientation) != sorted(self.edges):
                return False
        if self.root is not None:
            if self.orientation is None or not 0 <= self.root < self.k:
                return False
            away = _orientation_away_from(self.k, self.edges, self.root)
            if set(away) != set(self.orientation):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, CliqueTree)
            and self.clique_masks == other.clique_masks
            and sorted(self.edges) == sorted(other.edges)
            and self.orientation == other.orientation
            and self.root == other.root
        )

    def __hash__(self):
        return hash((self.clique_masks, tuple(sorted(self.edges)), self.orientation, self.root))

    def __repr__(self):
        extra = ""
        if self.orientation is not None:
            extra += ", oriented"
        if self.root is not None:
            extra += f", root={self.root}"
        return f"CliqueTree(k={self.k}, edges={list(self.edges)}{extra})"


def _edges_form_tree(k: int, edges: Sequence[tuple[int, int]]) -> bool:
    if len(edges) != max(k - 1, 0):
        return False
    if k == 0:
        return False
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def _nodes_connected(adj: Sequence[int], subset: int) -> bool:
    start = (subset & -subset).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= subset & ~seen
        seen |= nxt
        frontier = nxt
    return seen == subset


def _orientation_away_from(
    k: int, edges: Sequence[tuple[int, int]], root: int
) -> list[tuple[int, int]]:
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    parent = {root: None}
    order = [root]
    for node in order:
        for nb in adj[node]:
            if nb not in parent:
                parent[nb] = node
                order.append(nb)
    out = []
    for i, j in edges:
        out.append((i, j) if parent.get(j) == i else (j, i))
    return out


# ---------------------------------------------------------------------------
# construction and enumeration


def _clique_setup(g: Graph) -> list[int]:
    if not is_connected(g):
        raise CliqueTreeError("clique trees require a connected graph")
    peo = require_chordal(g, "clique tree construction")
    return maximal_clique_masks(g.adjacency_masks, peo)


def build_clique_tree(g: Graph) -> CliqueTree:
    """Deterministic clique tree via maximum-weight spanning tree.

    Candidate edges are clique pairs with nonempty intersection, weighted by
    intersection size; ties break lexicographically on the (fixed) clique
    indexing. The subtree property is verified before returning.
    """
    cliques = _clique_setup(g)
    k = len(cliques)
    cands = sorted(
        ((i, j) for i, j in itertools.combinations(range(k), 2) if cliques[i] & cliques[j]),
        key=lambda e: (-(cliques[e[0]] & cliques[e[1]]).bit_count(), e),
    )
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i, j in cands:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == k - 1:
                break
    if len(chosen) != k - 1:
        raise CliqueTreeError("nonempty-intersection clique graph is disconnected")
    tree = CliqueTree(g.n, cliques, chosen)
    if not _is_clique_tree_edges(cliques, chosen, g.n):
        raise AssertionError("maximum-weight tree failed the subtree property")
    return tree


def _is_clique_tree_edges(cliques: Sequence[int], edges: Sequence[tuple[int, int]], n: int) -> bool:
    # T^v connected <=> the number of tree edges joining two cliques that both
    # contain v is exactly (number of cliques containing v) - 1
    inner = [0] * n
    for i, j in edges:
        both = cliques[i] & cliques[j]
        for v in _bit_indices(both):
            inner[v] += 1
    for v in range(n):
        cnt = sum(1 for c in cliques if c >> v & 1)
        if cnt and inner[v] != cnt - 1:
            return False
    return True


def iter_tree_edge_sets(
    clique_masks: Sequence[int], n: int, limit: int = DEFAULT_TREE_LIMIT
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Edge sets of every clique tree over the given cliques, each once.

    Backtracking include/exclude over the nonempty-intersection clique-graph
    edges with two prunes: the undecided+included edges must still connect
    all nodes, and for each vertex v they must still be able to connect the
    nodes containing v using only edges internal to that set. The budget
    counts *examined* spanning trees (completed candidates, valid or not),
    since that is what bounds the work; on trip, TreeBudgetExceeded is raised
    after the trees found so far were yielded.
    """
    k = len(clique_masks)
    if k == 0:
        raise CliqueTreeError("no cliques")
    if k == 1:
        yield ()
        return
    cand = [
        (i, j)
        for i, j in itertools.combinations(range(k), 2)
        if clique_masks[i] & clique_masks[j]
    ]
    m = len(cand)
    occs = []
    for v in range(n):
        occ = 0
        for idx, c in enumerate(clique_masks):
            if c >> v & 1:
                occ |= 1 << idx
        if occ.bit_count() >= 2:
            occs.append(occ)
    occs = sorted(set(occs))
    # per candidate edge, which occ-sets it is internal to
    edge_occs = []
    for i, j in cand:
        pair = 1 << i | 1 << j
        edge_occs.append([t for t, occ in enumerate(occs) if pair & ~occ == 0])
    # vertex-internal requirement at completion, per occ-set
    need = [occ.bit_count() - 1 for occ in occs]

    full = (1 << k) - 1
    adj_all: list[int] = [0] * k  # adjacency over included+undecided edges
    for i, j in cand:
        adj_all[i] |= 1 << j
        adj_all[j] |= 1 << i
    # adjacency restricted inside each occ-set
    adj_occ: list[list[int]] = [[0] * k for _ in occs]
    for t, occ in enumerate(occs):
        for i, j in cand:
            if (1 << i | 1 << j) & ~occ == 0:
                adj_occ[t][i] |= 1 << j
                adj_occ[t][j] |= 1 << i

    examined = 0
    comp = list(range(k))  # component id per node, for included edges

    def connected_via(adj: list[int], subset: int) -> bool:
        start = (subset & -subset).bit_length() - 1
        seen = 1 << start
        while True:
            nxt = 0
            msk = seen
            while msk:
                low = msk & -msk
                nxt |= adj[low.bit_length() - 1]
                msk ^= low
            nxt &= subset & ~seen
            if not nxt:
                return seen == subset
            seen |= nxt

    def rec(pos: int, chosen: list[tuple[int, int]], inner: list[int]) -> Iterator:
        nonlocal examined
        if len(chosen) == k - 1:
            examined += 1
            if all(inner[t] == need[t] for t in range(len(occs))):
                yield tuple(chosen)
            if examined >= limit:
                raise TreeBudgetExceeded(examined)
            return
        if pos == m or len(chosen) + (m - pos) < k - 1:
            return
        i, j = cand[pos]
        ci, cj = comp[i], comp[j]
        if ci != cj:
            # include branch
            saved = comp.copy()
            for x in range(k):
                if comp[x] == cj:
                    comp[x] = ci
            chosen.append((i, j))
            for t in edge_occs[pos]:
                inner[t] += 1
            yield from rec(pos + 1, chosen, inner)
            for t in edge_occs[pos]:
                inner[t] -= 1
            chosen.pop()
            comp[:] = saved
        # exclude branch: drop the edge from the availability adjacencies
        adj_all[i] &= ~(1 << j)
        adj_all[j] &= ~(1 << i)
        touched = edge_occs[pos]
        for t in touched:
            adj_occ[t][i] &= ~(1 << j)
            adj_occ[t][j] &= ~(1 << i)
        ok = connected_via(adj_all, full) and all(
            connected_via(adj_occ[t], occs[t]) for t in touched
        )
        if ok:
            yield from rec(pos + 1, chosen, inner)
        adj_all[i] |= 1 << j
        adj_all[j] |= 1 << i
        for t in touched:
            adj_occ[t][i] |= 1 << j
            adj_occ[t][j] |= 1 << i

    yield from rec(0, [], [0] * len(occs))


def enumerate_clique_trees(
    g: Graph, limit: int = DEFAULT_TREE_LIMIT
) -> Iterator[CliqueTree]:
    """Every clique tree of g, each exactly once, as CliqueTree values.

    Raises TreeBudgetExceeded (after yielding what was found) when more than
    `limit` spanning trees get examined.
    """
    cliques = _clique_setup(g)
    for edges in iter_tree_edge_sets(cliques, g.n, limit):
        yield CliqueTree(g.n, cliques, edges)


# ---------------------------------------------------------------------------
# separators


def separator_multiplicity(g: Graph, s: Iterable[int]) -> int:
    """c - 1, where c counts the components of G minus s that contain a
    vertex complete to s. Requires s to actually separate (c >= 2)."""
    smask = 0
    for v in s:
        g._check_vertex(v)
        smask |= 1 << v
    masks = g.adjacency_masks
    within = ((1 << g.n) - 1) & ~smask
    c = 0
    for comp in component_masks(masks, within):
        m = comp
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if smask & ~masks[v] == 0:
                c += 1
                break
            m ^= low
    if c < 2:
        raise CliqueTreeError(f"vertex set {sorted(_bit_indices(smask))} is not a separator")
    return c - 1


def tree_separators(g: Graph, t: CliqueTree) -> list[Separator]:
    """The distinct edge labels of t with their multiplicities."""
    out = {}
    for lbl in t.label_masks:
        if lbl not in out:
            out[lbl] = separator_multiplicity(g, _bit_indices(lbl))
    return [Separator(frozenset(_bit_indices(l)), m) for l, m in sorted(out.items())]


# ---------------------------------------------------------------------------
# subtrees


def vertex_subtree(t: CliqueTree, v: int) -> frozenset[int]:
    """Nodes of t whose clique contains v (connected by the tree property)."""
    if not 0 <= v < t.n:
        raise CliqueTreeError(f"vertex {v} out of range")
    occ = t.occupancy(v)
    if not occ:
        raise CliqueTreeError(f"vertex {v} occurs in no clique")
    return frozenset(_bit_indices(occ))


def reduced_subtree(t: CliqueTree, nodes: Iterable[int]) -> frozenset[int]:
    """Steiner closure: the minimum subtree of t containing `nodes`.

    Equals the union of tree paths from one fixed member to all the rest;
    every leaf of the result is one of `nodes`.
    """
    wanted = sorted(set(nodes))
    if not wanted:
        raise CliqueTreeError("reduced_subtree of an empty node set")
    for x in wanted:
        if not 0 <= x < t.k:
            raise CliqueTreeError(f"node {x} out of range")
    adj = t.node_adjacency()
    base = wanted[0]
    out = 1 << base
    for target in wanted[1:]:
        out |= _tree_path_mask(adj, base, target)
    return frozenset(_bit_indices(out))


def _tree_path_mask(adj: Sequence[int], src: int, dst: int) -> int:
    prev = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in _bit_indices(adj[u]):
                if w not in prev:
                    prev[w] = u
                    if w == dst:
                        mask = 0
                        while w != -1:
                            mask |= 1 << w
                            w = prev[w]
                        return mask
                    nxt.append(w)
        frontier = nxt
    raise CliqueTreeError("nodes lie in different trees")


_subsets_by_size: dict[int, list[int]] = {}


def _subsets_ascending(k: int) -> list[int]:
    if k not in _subsets_by_size:
        _subsets_by_size[k] = sorted(range(1, 1 << k), key=lambda s: (s.bit_count(), s))
    return _subsets_by_size[k]


def asteroid_subtree_masks(
    tree_adj: Sequence[int], occ_masks: Sequence[int]
) -> tuple[int, int]:
    """(node mask, leaf count) of the minimum subtree meeting every
    occupancy mask, over a tree given by node adjacency masks.

    Scans connected node subsets in increasing size; minimality makes the
    result independent of scan order (the minimum subtree is unique; the
    uniqueness is asserted exhaustively in the property tests).
    """
    k = len(tree_adj)
    for subset in _subsets_ascending(k):
        ok = True
        for occ in occ_masks:
            if not subset & occ:
                ok = False
                break
        if not ok:
            continue
        if _nodes_connected(tree_adj, subset):
            leaves = 0
            m = subset
            while m:
                low = m & -m
                if (tree_adj[low.bit_length() - 1] & subset).bit_count() <= 1:
                    leaves += 1
                m ^= low
            return subset, leaves
    raise CliqueTreeError("no subtree meets every occupancy set")


def asteroid_subtree(t: CliqueTree, z: Sequence[int]) -> tuple[frozenset[int], int]:
    """Minimum subtree of t meeting T^{z_i} for each member of z, with its
    leaf count (nodes of degree <= 1 inside the subtree).

    z must be pairwise non-adjacent, which is checked against the cliques
    (two vertices are adjacent exactly when some maximal clique holds both).
    The leaf count never exceeds len(z).
    """
    if len(z) < 2:
        raise CliqueTreeError("asteroid_subtree needs at least two vertices")
    if len(set(z)) != len(z):
        raise CliqueTreeError("repeated vertex")
    occs = []
    for v in z:
        occ = t.occupancy(v)
        if not occ:
            raise CliqueTreeError(f"vertex {v} occurs in no clique")
        occs.append(occ)
    for a, b in itertools.combinations(range(len(z)), 2):
        if any(c >> z[a] & 1 and c >> z[b] & 1 for c in t.clique_masks):
            raise CliqueTreeError(f"vertices {z[a]} and {z[b]} are adjacent")
    subset, leaves = asteroid_subtree_masks(t.node_adjacency(), occs)
    return frozenset(_bit_indices(subset)), leaves


# ---------------------------------------------------------------------------
# path and orientation checks


def is_clique_path(t: CliqueTree) -> bool:
    """True when the tree itself is a path (every node degree <= 2)."""
    return all(a.bit_count() <= 2 for a in t.node_adjacency())


def is_clique_path_tree(t: CliqueTree) -> bool:
    """True when every vertex subtree T^v is a path in t."""
    adj = t.node_adjacency()
    for v in range(t.n):
        occ = t.occupancy(v)
        if occ.bit_count() >= 3:
            for idx in _bit_indices(occ):
                if (adj[idx] & occ).bit_count() > 2:
                    return False
    return True


def _vertex_path_constraints(t: CliqueTree) -> Optional[list[list[tuple[int, int]]]]:
    """For each vertex with |T^v| >= 3, the signed edge sequence of the path
    T^v: a list of (edge index, sign) with sign +1 when the stored (i, j)
    matches the traversal direction. None when some T^v is not a path.

    Paths with a single edge impose nothing (one edge is a directed path
    either way), so only longer subtrees contribute.
    """
    adj = t.node_adjacency()
    edge_index = {e: idx for idx, e in enumerate(t.edges)}
    out = []
    for v in range(t.n):
        occ = t.occupancy(v)
        cnt = occ.bit_count()
        if cnt < 3:
            continue
        nodes = _bit_indices(occ)
        degs = {x: (adj[x] & occ).bit_count() for x in nodes}
        ends = [x for x in nodes if degs[x] <= 1]
        if any(d > 2 for d in degs.values()) or len(ends) != 2:
            return None
        seq = []
        cur, prev = min(ends), -1
        for _ in range(cnt - 1):
            nxt_mask = adj[cur] & occ & ~(1 << prev if prev >= 0 else 0)
            nxt = (nxt_mask & -nxt_mask).bit_length() - 1
            e = (cur, nxt) if cur < nxt else (nxt, cur)
            seq.append((edge_index[e], 1 if e == (cur, nxt) else -1))
            prev, cur = cur, nxt
        out.append(seq)
    return out


def _orientation_tuple(t: CliqueTree, assign: Sequence[int]) -> tuple[tuple[int, int], ...]:
    # assign[e] = +1 keeps the stored (i, j) direction, -1 flips it
    return tuple(
        (i, j) if sign > 0 else (j, i) for (i, j), sign in zip(t.edges, assign)
    )


def directed_orientations(t: CliqueTree) -> Iterator[CliqueTree]:
    """All edge orientations making every T^v a directed path, by pruned
    exhaustive search over the 2^(k-1) orientations.

    The pruning is per-vertex path consistency: inside a fixed T^v path the
    edges must all follow the traversal or all oppose it, so two decided
    edges of one path prune half the branches the moment they disagree.
    """
    constraints = _vertex_path_constraints(t)
    if constraints is None:
        return
    m = len(t.edges)
    if m == 0:
        yield t.with_orientation(())
        return
    # constraints touching each edge, for incremental checking
    by_edge: list[list[list[tuple[int, int]]]] = [[] for _ in range(m)]
    for seq in constraints:
        for e, _sign in seq:
            by_edge[e].append(seq)
    assign = [0] * m

    def consistent(seq) -> bool:
        want = 0
        for e, sign in seq:
            if assign[e]:
                val = assign[e] * sign
                if want == 0:
                    want = val
                elif val != want:
                    return False
        return True

    def rec(e: int) -> Iterator:
        if e == m:
            yield t.with_orientation(_orientation_tuple(t, assign))
            return
        for val in (1, -1):
            assign[e] = val
            if all(consistent(seq) for seq in by_edge[e]):
                yield from rec(e + 1)
        assign[e] = 0

    yield from rec(0)


def _orient_by_parity(t: CliqueTree) -> Optional[CliqueTree]:
    """Constraint-propagation variant: union-find with parity over edges."""
    constraints = _vertex_path_constraints(t)
    if constraints is None:
        return None
    m = len(t.edges)
    parent = list(range(m))
    parity = [0] * m  # parity to parent

    def find(x: int) -> tuple[int, int]:
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    for seq in constraints:
        for (e1, s1), (e2, s2) in zip(seq, seq[1:]):
            # s1*x1 == s2*x2  <=>  x1 and x2 differ iff s1 != s2
            want = 0 if s1 == s2 else 1
            r1, p1 = find(e1)
            r2, p2 = find(e2)
            if r1 == r2:
                if p1 ^ p2 != want:
                    return None
            else:
                parent[r1] = r2
                parity[r1] = p1 ^ p2 ^ want
    assign = [1 if find(e)[1] == 0 else -1 for e in range(m)]
    return t.with_orientation(_orientation_tuple(t, assign))


def orient_directed(t: CliqueTree, mode: str = "prune") -> Optional[CliqueTree]:
    """An orientation of t making every T^v a directed path, or None.

    Requires every T^v to already be a path (is_clique_path_tree). The
    default mode is the pruned exhaustive search; mode="parity" switches to
    the union-find constraint propagation (same answers, checked in tests).
    """
    if not is_clique_path_tree(t):
        raise CliqueTreeError("orient_directed requires every vertex subtree to be a path")
    if mode == "parity":
        return _orient_by_parity(t)
    if mode != "prune":
        raise CliqueTreeError(f"unknown mode {mode!r}")
    return next(directed_orientations(t), None)


def orient_rooted(t: CliqueTree) -> Optional[CliqueTree]:
    """A root making every T^v a directed path when all edges point away
    from it, or None. Tries every node, smallest index first."""
    if not is_clique_path_tree(t):
        raise CliqueTreeError("orient_rooted requires every vertex subtree to be a path")
    constraints = _vertex_path_constraints(t)
    edge_pos = {e: idx for idx, e in enumerate(t.edges)}
    for root in range(t.k):
        away = _orientation_away_from(t.k, t.edges, root)
        assign = [0] * len(t.edges)
        for (a, b) in away:
            e = (a, b) if a < b else (b, a)
            assign[edge_pos[e]] = 1 if (a, b) == e else -1
        ok = True
        for seq in constraints:
            vals = {assign[e] * sign for e, sign in seq}
            if len(vals) > 1:
                ok = False
                break
        if ok:
            return t.with_orientation(away, root=root)
    return None


# ---------------------------------------------------------------------------
# DOT export


def to_dot(t: CliqueTree) -> str:
    """Graphviz rendering: node label = sorted clique, edge label = sorted
    separator, arrowheads when oriented, doubled border on the root."""
    directed = t.orientation is not None
    lines = ["digraph cliquetree {" if directed else "graph cliquetree {"]
    for idx in range(t.k):
        label = " ".join(str(v) for v in sorted(_bit_indices(t.clique_masks[idx])))
        extra = ", peripheries=2" if idx == t.root else ""
        lines.append(f'  q{idx} [label="{label}"{extra}];')
    arrow = "->" if directed else "--"
    pairs = t.orientation if directed else t.edges
    for (a, b) in pairs:
        e = (a, b) if a < b else (b, a)
        lbl_mask = t.clique_masks[e[0]] & t.clique_masks[e[1]]
        lbl = " ".join(str(v) for v in sorted(_bit_indices(lbl_mask)))
        lines.append(f'  q{a} {arrow} q{b} [label="{lbl}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
