"""Randomized properties: encoding round-trips, clique-tree invariants,
orientation-mode agreement, and witness re-verification."""

import itertools
from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from asteroidal import (
    UNKNOWN,
    Graph,
    build_clique_tree,
    chordality,
    classify,
    enumerate_clique_trees,
    find_asteroidal_quadruples,
    find_asteroidal_triples,
    find_parallel_asteroidal_quadruples,
    find_strong_asteroidal_triples,
    find_weak_asteroidal_quadruples,
    is_clique_path_tree,
    maximal_cliques,
    orient_directed,
    parse_edge_list,
    parse_graph6,
    separator_multiplicity,
    tree_separators,
    write_edge_list,
    write_graph6,
)
from asteroidal.cliquetree import asteroid_subtree


@st.composite
def any_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=12))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return Graph(n, [])
    picked = draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, sorted(picked))


@st.composite
def chordal_graphs(draw, max_n=7):
    """Connected chordal graph grown one simplicial vertex at a time:
    each new vertex is attached to a nonempty subset of an existing
    maximal clique, which preserves a perfect elimination ordering."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    g = Graph(1, [])
    for v in range(1, n):
        cliques = sorted(tuple(sorted(c)) for c in maximal_cliques(g))
        base = draw(st.sampled_from(cliques))
        mask = draw(st.integers(min_value=1, max_value=(1 << len(base)) - 1))
        anchors = [base[i] for i in range(len(base)) if mask >> i & 1]
        g = Graph(v + 1, g.edges() + [(u, v) for u in anchors])
    return g


class TestEncodingRoundTrips:
    @given(any_graphs())
    def test_graph6(self, g):
        back = parse_graph6(write_graph6(g))
        assert back.n == g.n and back.edges() == g.edges()

    @given(any_graphs())
    def test_edge_list(self, g):
        back = parse_edge_list(write_edge_list(g))
        assert back.n == g.n and back.edges() == g.edges()


class TestCliqueTreeInvariants:
    @given(chordal_graphs())
    def test_generator_is_chordal_connected(self, g):
        w = chordality(g)
        assert w.peo is not None and w.verify(g)

    @given(chordal_graphs())
    def test_build_validates(self, g):
        assert build_clique_tree(g).validate(g)

    @given(chordal_graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_enumeration_agrees_with_build(self, g):
        trees = list(enumerate_clique_trees(g, limit=10**6))
        assert all(t.validate(g) for t in trees)
        built = frozenset(map(frozenset, build_clique_tree(g).edges))
        assert built in {frozenset(map(frozenset, t.edges)) for t in trees}

    @given(chordal_graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_label_multiset_and_multiplicity(self, g):
        trees = list(enumerate_clique_trees(g, limit=10**6))
        labels = [
            Counter(
                frozenset(t.cliques[a] & t.cliques[b]) for a, b in t.edges
            )
            for t in trees
        ]
        assert all(c == labels[0] for c in labels)
        for sep in tree_separators(g, trees[0]):
            assert sep.multiplicity == separator_multiplicity(g, sep.vertices)
            assert all(c[sep.vertices] == sep.multiplicity for c in labels)

    @given(chordal_graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_orientation_modes_agree(self, g):
        for t in enumerate_clique_trees(g, limit=10**6):
            if not is_clique_path_tree(t):
                continue
            pruned = orient_directed(t, mode="prune")
            parity = orient_directed(t, mode="parity")
            assert (pruned is None) == (parity is None)
            if pruned is not None:
                assert pruned.validate(g) and parity.validate(g)


class TestWitnessesVerify:
    @given(chordal_graphs())
    @settings(max_examples=60, deadline=None)
    def test_asteroid_witnesses(self, g):
        for w in find_asteroidal_triples(g) + find_asteroidal_quadruples(g):
            assert w.verify(g)

    @given(chordal_graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_linked_witnesses(self, g):
        for finder in (
            find_strong_asteroidal_triples,
            find_weak_asteroidal_quadruples,
            find_parallel_asteroidal_quadruples,
        ):
            found = finder(g)
            if found is not UNKNOWN:
                assert all(w.verify(g) for w in found)

    @given(chordal_graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_subtree_leaf_bound(self, g):
        t = build_clique_tree(g)
        for w in find_asteroidal_triples(g):
            _, leaves = asteroid_subtree(t, w.members)
            assert leaves == 3


class TestClassifyChain:
    @given(chordal_graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_chain_monotone_and_certified(self, g):
        order = ("interval", "rooted_path", "directed_path", "path")
        verdicts = classify(g)
        members = [verdicts[c].member for c in order]
        decided = "".join("y" if m == "yes" else "n"
                          for m in members if m != "unknown")
        assert "yn" not in decided
        for v in verdicts.values():
            cert = v.certificate
            if hasattr(cert, "verify"):
                assert cert.verify(g)
