"""Asteroidal triples and quadruples, plus the strong-link variants.

A triple of pairwise non-adjacent vertices is asteroidal when every two of
them are joined by a path avoiding the closed neighborhood of the third.
A quadruple is asteroidal when every three of its members form an
asteroidal triple. The strong variants additionally require strong links
(see strongpath) between members: all three pairs for a strong triple, at
least one pair inside every 3-subset for a weak quadruple, and a perfect
pairing into two strong-linked pairs for a parallel quadruple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .budgets import UNKNOWN, Budget
from .graphs import Graph, GraphError, _bit_indices, component_masks, shortest_path_masks
from .strongpath import StrongPathWitness, find_strong_path, verify_strong_path_witness

__all__ = [
    "AvoidingPath",
    "AsteroidWitness",
    "StrongTripleWitness",
    "WeakQuadrupleWitness",
    "ParallelQuadrupleWitness",
    "avoiding_path",
    "find_asteroidal_triples",
    "find_asteroidal_quadruples",
    "find_strong_asteroidal_triples",
    "find_weak_asteroidal_quadruples",
    "find_parallel_asteroidal_quadruples",
]


@dataclass(frozen=True)
class AvoidingPath:
    """A u-v path whose vertices all avoid N[avoided]."""

    u: int
    v: int
    avoided: int
    path: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        masks = g.adjacency_masks
        n = g.n
        p = self.path
        if not (0 <= self.avoided < n) or self.u == self.v:
            return False
        if not p or p[0] != self.u or p[-1] != self.v:
            return False
        if len(set(p)) != len(p):
            return False
        forbidden = masks[self.avoided] | 1 << self.avoided
        for w in p:
            if not (0 <= w < n) or forbidden >> w & 1:
                return False
        return all(masks[a] >> b & 1 for a, b in zip(p, p[1:]))


def avoiding_path(g: Graph, u: int, v: int, w: int) -> Optional[AvoidingPath]:
    """Shortest u-v path avoiding the closed neighborhood of w, if any.

    Deleting w itself loses nothing: a path entering w would have to use a
    neighbor of w, which is already forbidden.
    """
    n = g.n
    for x in (u, v, w):
        if not (0 <= x < n):
            raise GraphError(f"vertex {x} out of range for a {n}-vertex graph")
    if u == v or u == w or v == w:
        raise GraphError(f"need three distinct vertices, got {u}, {v}, {w}")
    masks = g.adjacency_masks
    if masks[w] >> u & 1 or masks[w] >> v & 1:
        raise GraphError(f"endpoints {u}, {v} must lie outside the neighborhood of {w}")
    allowed = ((1 << n) - 1) & ~(masks[w] | 1 << w)
    path = shortest_path_masks(masks, allowed, u, v)
    if path is None:
        return None
    return AvoidingPath(u=u, v=v, avoided=w, path=tuple(path))


def _pair_requirements(members: tuple[int, ...]) -> list[tuple[int, int, int]]:
    # (a, b, avoided) for every unordered member pair and every other member
    out = []
    for a, b in combinations(members, 2):
        for w in members:
            if w != a and w != b:
                out.append((a, b, w))
    return out


@dataclass(frozen=True)
class AsteroidWitness:
    """An asteroidal triple or quadruple with its avoiding paths.

    proofs line up with the (pair, avoided) requirements in the order
    produced by iterating member pairs lexicographically and, for each
    pair, the remaining members in member order: 3 proofs for a triple,
    12 for a quadruple.
    """

    kind: str
    members: tuple[int, ...]
    proofs: tuple[AvoidingPath, ...]

    def verify(self, g: Graph) -> bool:
        masks = g.adjacency_masks
        n = g.n
        m = self.members
        want = {"triple": 3, "quadruple": 4}.get(self.kind)
        if want is None or len(m) != want or len(set(m)) != len(m):
            return False
        if not all(0 <= x < n for x in m):
            return False
        for a, b in combinations(m, 2):
            if masks[a] >> b & 1:
                return False
        needs = _pair_requirements(m)
        if len(self.proofs) != len(needs):
            return False
        for proof, (a, b, w) in zip(self.proofs, needs):
            if (proof.u, proof.v, proof.avoided) != (a, b, w):
                return False
            if not proof.verify(g):
                return False
        return True


def _avoidance_tables(masks: list[int], n: int) -> list[list[int]]:
    # table[w][x] = component index of x in the graph minus N[w], else -1
    full = (1 << n) - 1
    tables = []
    for w in range(n):
        allowed = full & ~(masks[w] | 1 << w)
        comp = [-1] * n
        for ci, cmask in enumerate(component_masks(masks, allowed)):
            for x in _bit_indices(cmask):
                comp[x] = ci
        tables.append(comp)
    return tables


def _triple_members(masks: list[int], n: int, tables: list[list[int]]) -> list[tuple[int, int, int]]:
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            if masks[a] >> b & 1:
                continue
            for c in range(b + 1, n):
                if masks[c] >> a & 1 or masks[c] >> b & 1:
                    continue
                ta, tb, tc = tables[a], tables[b], tables[c]
                if tc[a] == tc[b] and tb[a] == tb[c] and ta[b] == ta[c]:
                    out.append((a, b, c))
    return out


def _quad_members(masks: list[int], n: int, tables: list[list[int]]) -> list[tuple[int, ...]]:
    triples = set(_triple_members(masks, n, tables))
    out = []
    for quad in combinations(range(n), 4):
        if all(sub in triples for sub in combinations(quad, 3)):
            out.append(quad)
    return out


def _build_witness(g: Graph, kind: str, members: tuple[int, ...]) -> AsteroidWitness:
    proofs = []
    for a, b, w in _pair_requirements(members):
        p = avoiding_path(g, a, b, w)
        assert p is not None  # membership was already established
        proofs.append(p)
    return AsteroidWitness(kind=kind, members=members, proofs=tuple(proofs))


def find_asteroidal_triples(g: Graph) -> list[AsteroidWitness]:
    """All asteroidal triples, each with its three avoiding paths."""
    masks = g.adjacency_masks
    tables = _avoidance_tables(masks, g.n)
    return [
        _build_witness(g, "triple", trip) for trip in _triple_members(masks, g.n, tables)
    ]


def find_asteroidal_quadruples(g: Graph) -> list[AsteroidWitness]:
    """All 4-sets whose every 3-subset is an asteroidal triple."""
    masks = g.adjacency_masks
    tables = _avoidance_tables(masks, g.n)
    return [
        _build_witness(g, "quadruple", quad) for quad in _quad_members(masks, g.n, tables)
    ]


class _LinkCache:
    """Memoized strong-link lookups sharing one started budget."""

    def __init__(self, g: Graph, budget: Budget):
        self.g = g
        self.budget = budget
        self.memo: dict[tuple[int, int], object] = {}

    def status(self, a: int, b: int):
        """(True, witness) | (False, None) | (UNKNOWN, None) for a pair."""
        key = (a, b) if a < b else (b, a)
        if key not in self.memo:
            self.memo[key] = find_strong_path(self.g, key[0], key[1], self.budget)
        got = self.memo[key]
        if got is UNKNOWN:
            return UNKNOWN, None
        if got is None:
            return False, None
        return True, got


@dataclass(frozen=True)
class StrongTripleWitness:
    """An asteroidal triple with all three pairs strong-linked.

    links line up with the member pairs (a,b), (a,c), (b,c).
    """

    members: tuple[int, int, int]
    base: AsteroidWitness
    links: tuple[StrongPathWitness, StrongPathWitness, StrongPathWitness]

    def verify(self, g: Graph) -> bool:
        if self.base.kind != "triple" or self.base.members != self.members:
            return False
        if not self.base.verify(g):
            return False
        pairs = list(combinations(self.members, 2))
        if len(self.links) != len(pairs):
            return False
        for link, (a, b) in zip(self.links, pairs):
            if {link.u, link.v} != {a, b}:
                return False
            if not verify_strong_path_witness(g, link):
                return False
        return True


@dataclass(frozen=True)
class WeakQuadrupleWitness:
    """An asteroidal quadruple where every 3-subset has a strong pair.

    links line up with the 3-subsets in lexicographic order; each link
    joins two members of its subset.
    """

    members: tuple[int, int, int, int]
    base: AsteroidWitness
    links: tuple[StrongPathWitness, ...]

    def verify(self, g: Graph) -> bool:
        if self.base.kind != "quadruple" or self.base.members != self.members:
            return False
        if not self.base.verify(g):
            return False
        subsets = list(combinations(self.members, 3))
        if len(self.links) != len(subsets):
            return False
        for link, sub in zip(self.links, subsets):
            if not {link.u, link.v} <= set(sub):
                return False
            if not verify_strong_path_witness(g, link):
                return False
        return True


@dataclass(frozen=True)
class ParallelQuadrupleWitness:
    """An asteroidal quadruple split into two strong-linked pairs."""

    members: tuple[int, int, int, int]
    base: AsteroidWitness
    pairing: tuple[tuple[int, int], tuple[int, int]]
    links: tuple[StrongPathWitness, StrongPathWitness]

    def verify(self, g: Graph) -> bool:
        if self.base.kind != "quadruple" or self.base.members != self.members:
            return False
        if not self.base.verify(g):
            return False
        (a, b), (c, d) = self.pairing
        if {a, b, c, d} != set(self.members) or len({a, b, c, d}) != 4:
            return False
        for link, pair in zip(self.links, self.pairing):
            if {link.u, link.v} != set(pair):
                return False
            if not verify_strong_path_witness(g, link):
                return False
        return True


def find_strong_asteroidal_triples(g: Graph, budget: Optional[Budget] = None):
    """Asteroidal triples whose three pairs are all strong-linked.

    An empty list is definitive. UNKNOWN is returned only when budgets left
    some candidate undecided and none was confirmed; a nonempty result may
    then be incomplete but its entries are all verified.
    """
    b = (budget if budget is not None else Budget()).started()
    cache = _LinkCache(g, b)
    out = []
    undecided = False
    for base in find_asteroidal_triples(g):
        statuses = [cache.status(p, q) for p, q in combinations(base.members, 2)]
        if any(st is False for st, _ in statuses):
            continue
        if all(st is True for st, _ in statuses):
            out.append(
                StrongTripleWitness(
                    members=base.members,
                    base=base,
                    links=tuple(w for _, w in statuses),
                )
            )
        else:
            undecided = True
    if undecided and not out:
        return UNKNOWN
    return out


def find_weak_asteroidal_quadruples(g: Graph, budget: Optional[Budget] = None):
    """Asteroidal quadruples with a strong pair inside every 3-subset.

    Same tri-state convention as find_strong_asteroidal_triples.
    """
    b = (budget if budget is not None else Budget()).started()
    cache = _LinkCache(g, b)
    out = []
    undecided = False
    for base in find_asteroidal_quadruples(g):
        links = []
        failed = False
        quad_unknown = False
        for sub in combinations(base.members, 3):
            chosen = None
            sub_unknown = False
            for p, q in combinations(sub, 2):
                st, w = cache.status(p, q)
                if st is True:
                    chosen = w
                    break
                if st is UNKNOWN:
                    sub_unknown = True
            if chosen is None:
                if sub_unknown:
                    quad_unknown = True
                else:
                    failed = True
                    break
            else:
                links.append(chosen)
        if failed:
            continue
        if quad_unknown:
            undecided = True
            continue
        out.append(WeakQuadrupleWitness(members=base.members, base=base, links=tuple(links)))
    if undecided and not out:
        return UNKNOWN
    return out


def find_parallel_asteroidal_quadruples(g: Graph, budget: Optional[Budget] = None):
    """Asteroidal quadruples admitting two disjoint strong-linked pairs.

    Same tri-state convention as find_strong_asteroidal_triples. The first
    workable pairing in the fixed order ((a,b),(c,d)), ((a,c),(b,d)),
    ((a,d),(b,c)) is reported.
    """
    b = (budget if budget is not None else Budget()).started()
    cache = _LinkCache(g, b)
    out = []
    undecided = False
    for base in find_asteroidal_quadruples(g):
        a, c, d, e = base.members
        pairings = (
            ((a, c), (d, e)),
            ((a, d), (c, e)),
            ((a, e), (c, d)),
        )
        got = None
        saw_unknown = False
        for first, second in pairings:
            st1, w1 = cache.status(*first)
            if st1 is False:
                continue
            st2, w2 = cache.status(*second)
            if st2 is False:
                continue
            if st1 is True and st2 is True:
                got = ParallelQuadrupleWitness(
                    members=base.members,
                    base=base,
                    pairing=(first, second),
                    links=(w1, w2),
                )
                break
            saw_unknown = True
        if got is not None:
            out.append(got)
        elif saw_unknown:
            undecided = True
    if undecided and not out:
        return UNKNOWN
    return out
