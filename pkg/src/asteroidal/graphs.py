"""Small-graph core: immutable graphs, graph6 and edge-list I/O, chordality
with checkable certificates, maximal cliques, and connectivity primitives.

Vertices are dense 0-based indices. Adjacency is held as one int bitmask per
vertex, which keeps the exhaustive sweeps elsewhere in this package fast; the
public surface still speaks in ints and frozensets.

A graph is *chordal* when it contains no hole (chordless cycle of length at
least four). `chordality` returns a certificate either way: a perfect
elimination ordering when the graph is chordal, otherwise an explicit hole.
Both certificate kinds re-verify against the graph from first principles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Bad graph input (malformed encoding, vertex out of range, ...)."""


class Graph6Error(GraphError):
    """graph6 decode/encode failure; message names the offending byte offset."""


class NotChordalError(GraphError):
    """Raised by operations that require chordal input.

    Carries the hole certificate in `witness`.
    """

    def __init__(self, message: str, witness: "ChordalityWitness"):
        super().__init__(message)
        self.witness = witness


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_cw")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_cw", None)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from adjacency bitmask rows (trusted fast path: rows must be
        symmetric with zero diagonal)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(masks))
        object.__setattr__(g, "_adj", tuple(masks))
        object.__setattr__(g, "_cw", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (read-only tuple)."""
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(_bit_indices(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self._adj[u] >> (u + 1) << (u + 1)
            for v in _bit_indices(row):
                out.append((u, v))
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `keep`; returns (graph, original-label tuple).

        New vertex i corresponds to old vertex labels[i]; labels ascend.
        """
        labels = tuple(sorted(set(keep)))
        for v in labels:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(labels)}
        masks = []
        for v in labels:
            row = 0
            rest = self._adj[v]
            for w in labels:
                if rest >> w & 1:
                    row |= 1 << pos[w]
            masks.append(row)
        return Graph.from_masks(masks), labels

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# mask-level primitives (hot paths; public API wraps these)


def connected_mask(masks: Sequence[int], within: int, start: int) -> int:
    """Vertices reachable from `start` using only vertices inside `within`."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(masks: Sequence[int], within: int) -> list[int]:
    """Connected components of the induced subgraph on `within`, as masks,
    ordered by smallest member."""
    out = []
    rest = within
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = connected_mask(masks, within, start)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_masks(masks: Sequence[int], n: int) -> bool:
    if n <= 1:
        return True
    full = (1 << n) - 1
    return connected_mask(masks, full, 0) == full


def shortest_path_masks(
    masks: Sequence[int], within: int, src: int, dst: int
) -> Optional[list[int]]:
    """Shortest src-dst path using only vertices in `within` (src, dst
    included), or None. Deterministic: BFS scans vertices in index order."""
    if not (within >> src & 1 and within >> dst & 1):
        return None
    prev = {src: -1}
    seen = 1 << src
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            cand = masks[u] & within & ~seen
            seen |= cand
            for w in _bit_indices(cand):
                prev[w] = u
                if w == dst:
                    path = [dst]
                    while path[-1] != src:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def mcs_order(masks: Sequence[int], n: int) -> list[int]:
    """Maximum cardinality search visit order (ties to the smallest index).

    The reversal of this order is a perfect elimination ordering exactly when
    the graph is chordal.
    """
    weights = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not visited >> v & 1 and weights[v] > best_w:
                best = v
                best_w = weights[v]
        order.append(best)
        visited |= 1 << best
        m = masks[best] & ~visited
        while m:
            low = m & -m
            weights[low.bit_length() - 1] += 1
            m ^= low
    return order


def peo_check(masks: Sequence[int], peo: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Verify the elimination property of `peo`; None when it holds.

    On failure returns (v, u, w): u, w are later neighbors of v with u not
    adjacent to w. Checking each vertex only against its elimination parent
    suffices to certify the whole ordering.
    """
    n = len(peo)
    later = 0
    later_masks = [0] * n
    for v in reversed(peo):
        later_masks[v] = later
        later |= 1 << v
    rank = [0] * n
    for i, v in enumerate(peo):
        rank[v] = i
    for v in peo:
        nb = masks[v] & later_masks[v]
        if nb == 0:
            continue
        u = min(_bit_indices(nb), key=lambda x: rank[x])
        rest = nb & ~(1 << u)
        missing = rest & ~masks[u]
        if missing:
            w = (missing & -missing).bit_length() - 1
            return (v, u, w)
    return None


def find_hole(masks: Sequence[int], n: int) -> Optional[list[int]]:
    """Some hole (chordless cycle, length >= 4), or None when chordal.

    Scans triples (v, u, w) with u, w nonadjacent neighbors of v and looks
    for a shortest u-w path outside N[v]; gluing v back on yields a hole.
    Every non-chordal graph admits such a triple (take three consecutive
    hole vertices), so the scan is complete.
    """
    full = (1 << n) - 1
    for v in range(n):
        nbv = masks[v]
        nb = _bit_indices(nbv)
        for ai in range(len(nb)):
            u = nb[ai]
            for bi in range(ai + 1, len(nb)):
                w = nb[bi]
                if masks[u] >> w & 1:
                    continue
                within = (full & ~(nbv | 1 << v)) | 1 << u | 1 << w
                path = shortest_path_masks(masks, within, u, w)
                if path is not None:
                    return [v] + path
    return None


def maximal_clique_masks(masks: Sequence[int], peo: Sequence[int]) -> list[int]:
    """Maximal cliques of a chordal graph with the given PEO, as bitmasks.

    Candidates are each vertex together with its later neighbors; keeping the
    inclusion-maximal candidates yields exactly the maximal cliques. Result is
    sorted by (size desc, mask) for determinism.
    """
    n = len(peo)
    later = 0
    cands = []
    for v in reversed(peo):
        cands.append((masks[v] & later) | 1 << v)
        later |= 1 << v
    out = []
    for c in set(cands):
        if not any(c != d and c & d == c for d in cands):
            out.append(c)
    out.sort(key=lambda c: (-c.bit_count(), c))
    return out


# ---------------------------------------------------------------------------
# chordality certificates


@dataclass(frozen=True)
class ChordalityWitness:
    """Either a perfect elimination ordering or a hole, never both."""

    peo: Optional[tuple[int, ...]] = None
    hole: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if (self.peo is None) == (self.hole is None):
            raise GraphError("witness must hold exactly one of peo, hole")

    @property
    def is_chordal(self) -> bool:
        return self.peo is not None

    def verify(self, g: Graph) -> bool:
        """Re-check this certificate against g from the definitions."""
        masks = g.adjacency_masks
        if self.peo is not None:
            if sorted(self.peo) != list(range(g.n)):
                return False
            later = 0
            ok = True
            for v in reversed(self.peo):
                nb = masks[v] & later
                # every pair of later neighbors must be adjacent
                for x in _bit_indices(nb):
                    if nb & ~masks[x] & ~(1 << x):
                        ok = False
                later |= 1 << v
            return ok
        hole = self.hole
        k = len(hole)
        if k < 4 or len(set(hole)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = bool(masks[hole[i]] >> hole[j] & 1)
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                if adjacent != consecutive:
                    return False
        return True


def chordality(g: Graph) -> ChordalityWitness:
    """Chordality certificate for g: a PEO, or a hole if one exists.

    Maximum cardinality search produces a candidate elimination ordering;
    if the elimination check fails, a hole is extracted directly. The
    witness is cached on the graph (immutable, so derived once).
    """
    if g._cw is not None:
        return g._cw
    masks = g.adjacency_masks
    order = mcs_order(masks, g.n)
    peo = order[::-1]
    if peo_check(masks, peo) is None:
        w = ChordalityWitness(peo=tuple(peo))
    else:
        hole = find_hole(masks, g.n)
        if hole is None:  # elimination check and hole scan disagree: impossible
            raise AssertionError("elimination check failed but no hole found")
        w = ChordalityWitness(hole=tuple(hole))
    object.__setattr__(g, "_cw", w)
    return w


def is_chordal(g: Graph) -> bool:
    masks = g.adjacency_masks
    return peo_check(masks, mcs_order(masks, g.n)[::-1]) is None


def require_chordal(g: Graph, context: str = "operation") -> tuple[int, ...]:
    """PEO of g, raising NotChordalError (with the hole) otherwise."""
    w = chordality(g)
    if not w.is_chordal:
        raise NotChordalError(f"{context} requires a chordal graph", w)
    return w.peo


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques of a chordal graph.

    Non-chordal input raises NotChordalError carrying the hole certificate.
    """
    peo = require_chordal(g, "maximal_cliques")
    return [frozenset(_bit_indices(c)) for c in maximal_clique_masks(g.adjacency_masks, peo)]


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of g with `removed` deleted, ordered by smallest
    member. Union of the parts is V minus removed."""
    rm = 0
    for v in removed:
        g._check_vertex(v)
        rm |= 1 << v
    within = ((1 << g.n) - 1) & ~rm
    return [frozenset(_bit_indices(c)) for c in component_masks(g.adjacency_masks, within)]


def is_connected(g: Graph) -> bool:
    return is_connected_masks(g.adjacency_masks, g.n)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line.

    Byte 0 is n+63; the following ceil(n(n-1)/2 / 6) bytes hold the upper
    triangle column by column, six bits per byte, most significant first,
    each byte offset by 63. Zero padding bits must be zero.
    """
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 line")
    data = bytes(ord(ch) if ord(ch) < 256 else 0 for ch in s)
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {off}: value {b} outside graph6 range 63..126")
    n = data[0] - 63
    if n == 63:
        raise Graph6Error("byte 0: long-form graph6 (n > 62) not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error(
            f"byte {len(data)}: expected {need} edge bytes for n={n}, got {len(data) - 1}"
        )
    masks = [0] * n
    k = 0
    for off, b in enumerate(data[1:], start=1):
        val = b - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = val >> shift & 1
            if k < nbits:
                if bit:
                    # bit k is the pair (i, j) in column-major upper-triangle order
                    j = _g6_col[k] if k < len(_g6_col) else _g6_column(k)
                    i = k - j * (j - 1) // 2
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
            elif bit:
                raise Graph6Error(f"byte {off}: nonzero padding bit")
            k += 1
    return Graph.from_masks(masks)


def _g6_column(k: int) -> int:
    j = 1
    while j * (j + 1) // 2 <= k:
        j += 1
    return j


# bit index -> column j lookup for the sizes this package sweeps
_g6_col = [_g6_column(k) for k in range(62 * 61 // 2)]


def write_graph6(g: Graph) -> str:
    """Encode as short-form graph6 (requires n <= 62); inverse of parse_graph6."""
    if g.n > 62:
        raise Graph6Error(f"byte 0: n={g.n} exceeds short-form limit 62")
    masks = g.adjacency_masks
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(masks[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p : p + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(lines) - 1} edge lines")
    pairs = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise GraphError(f"edge line must be 'u v', got {ln!r}")
        pairs.append((toks[0], toks[1]))
    # when every token is an integer index in 0..n-1 the labels are used
    # as-is; otherwise all labels are remapped in first-seen order
    def as_index(tok: str) -> int:
        try:
            value = int(tok)
        except ValueError:
            return -1
        return value if 0 <= value < n else -1

    if all(as_index(t) >= 0 for uv in pairs for t in uv):
        edges = [(int(u), int(v)) for u, v in pairs]
    else:
        labels: dict[str, int] = {}
        edges = []
        for u, v in pairs:
            for tok in (u, v):
                if tok not in labels:
                    if len(labels) >= n:
                        raise GraphError(f"more than {n} distinct vertex labels")
                    labels[tok] = len(labels)
            edges.append((labels[u], labels[v]))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Sniff edge-list ('n m' header) vs graph6 and parse one graph."""
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith(">"):
            continue
        toks = ln.split()
        if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
            return parse_edge_list(text)
        return parse_graph6(ln)
    raise GraphError("no graph found in input")


def iter_graph6_lines(text: str) -> Iterator[tuple[int, str]]:
    """(line number, graph6 line) pairs; blank lines and '>' comments skipped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith(">"):
            continue
        yield lineno, ln
