"""Recognizer tests: frozen verdicts for the named families, certificate
shapes, route merging, budget behavior, and exhaustive cross-checks of
every recognizer against brute-force clique tree enumeration."""

import itertools

import pytest

from asteroidal import Graph, f23, gadget, spider, sun
from asteroidal.asteroids import AsteroidWitness, StrongTripleWitness
from asteroidal.budgets import Budget
from asteroidal.cliquetree import (
    CliqueTree,
    enumerate_clique_trees,
    is_clique_path,
    is_clique_path_tree,
    orient_directed,
    orient_rooted,
)
from asteroidal.graphs import ChordalityWitness, GraphError, is_chordal, is_connected
from asteroidal.recognize import (
    CLASS_CHAIN,
    ClassVerdict,
    ExhaustionCertificate,
    RouteDisagreement,
    _merge_routes,
    classify,
    recognize_directed_path,
    recognize_interval,
    recognize_path,
    recognize_rooted_path,
)


def connected_chordal_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        if is_connected(g) and is_chordal(g):
            yield g


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestInterval:
    def test_p4_both_routes(self):
        g = path_graph(4)
        vt = recognize_interval(g, "theorem")
        assert (vt.member, vt.route, vt.certificate) == ("yes", "theorem", None)
        vo = recognize_interval(g, "oracle")
        assert (vo.member, vo.route) == ("yes", "oracle")
        assert isinstance(vo.certificate, CliqueTree)
        assert is_clique_path(vo.certificate) and vo.certificate.validate(g)
        vb = recognize_interval(g, "both")
        assert vb.member == "yes" and vb.route == "oracle"

    def test_complete_graph(self):
        v = recognize_interval(complete_graph(4), "both")
        assert v.member == "yes"
        assert v.certificate.k == 1

    def test_spider_theorem_certificate(self):
        g = spider(3)
        v = recognize_interval(g, "theorem")
        assert v.member == "no"
        assert isinstance(v.certificate, AsteroidWitness)
        assert v.certificate.members == (2, 4, 6)
        assert v.certificate.verify(g)

    def test_spider_oracle_exhausts(self):
        v = recognize_interval(spider(3), "oracle")
        assert v.member == "no"
        assert isinstance(v.certificate, ExhaustionCertificate)
        assert v.certificate.mode == "clique-path-ordering"
        assert v.certificate.checked > 0

    def test_both_prefers_obstruction_on_no(self):
        v = recognize_interval(spider(3), "both")
        assert v.member == "no" and v.route == "theorem"
        assert isinstance(v.certificate, AsteroidWitness)

    def test_sun_not_interval(self):
        assert recognize_interval(sun(3), "both").member == "no"

    def test_holes_fail_every_route(self):
        for g in (cycle_graph(4), cycle_graph(5)):
            for route in ("theorem", "oracle", "both"):
                v = recognize_interval(g, route)
                assert v.member == "no"
                assert isinstance(v.certificate, ChordalityWitness)
                assert v.certificate.hole is not None

    def test_unknown_route_rejected(self):
        with pytest.raises(GraphError):
            recognize_interval(path_graph(3), "guess")


class TestPath:
    def test_sun_is_path(self):
        v = recognize_path(sun(3))
        assert v.member == "yes"
        assert is_clique_path_tree(v.certificate)
        assert v.certificate.validate(sun(3))

    def test_f23_is_path(self):
        assert recognize_path(f23()).member == "yes"

    def test_hole_is_not(self):
        v = recognize_path(cycle_graph(5))
        assert v.member == "no"
        assert v.certificate.hole is not None


class TestDirectedPath:
    def test_f23_both_routes(self):
        g = f23()
        vt = recognize_directed_path(g, "theorem")
        assert (vt.member, vt.certificate) == ("yes", None)
        vo = recognize_directed_path(g, "oracle")
        assert vo.member == "yes"
        assert vo.certificate.orientation is not None
        assert vo.certificate.validate(g)
        assert recognize_directed_path(g, "both").member == "yes"

    def test_sun_theorem_certificate(self):
        g = sun(3)
        v = recognize_directed_path(g, "theorem")
        assert v.member == "no"
        assert isinstance(v.certificate, StrongTripleWitness)
        assert v.certificate.members == (3, 4, 5)
        assert v.certificate.verify(g)

    def test_sun_oracle_exhausts(self):
        v = recognize_directed_path(sun(3), "oracle")
        assert v.member == "no"
        assert isinstance(v.certificate, ExhaustionCertificate)
        # the sun's only clique tree is the star on the central clique
        assert v.certificate.checked == 1

    def test_both_prefers_obstruction_on_no(self):
        v = recognize_directed_path(sun(3), "both")
        assert isinstance(v.certificate, StrongTripleWitness)

    def test_theorem_unknown_under_budget(self):
        # strong-link search on the spider cannot finish with one path probe
        v = recognize_directed_path(spider(3), "theorem", Budget(path_limit=1))
        assert v.member == "unknown" and v.certificate is None

    def test_both_falls_back_to_oracle_when_theorem_unknown(self):
        v = recognize_directed_path(spider(3), "both", Budget(path_limit=1))
        assert v.member == "yes" and v.route == "oracle"


class TestRootedPath:
    def test_spiders_are_rooted(self):
        for legs in (3, 4):
            v = recognize_rooted_path(spider(legs))
            assert v.member == "yes"
            assert v.certificate.root is not None
            assert v.certificate.validate(spider(legs))

    def test_f23_is_not(self):
        v = recognize_rooted_path(f23())
        assert v.member == "no"
        assert isinstance(v.certificate, ExhaustionCertificate)
        assert v.certificate.mode == "rooted-orientation"

    def test_gadget_is_not(self):
        assert recognize_rooted_path(gadget()).member == "no"

    def test_sun_is_not(self):
        assert recognize_rooted_path(sun(3)).member == "no"


class TestBudgets:
    def test_interval_ordering_search_trips(self):
        v = recognize_interval(spider(3), "oracle", Budget(tree_limit=1))
        assert v.member == "unknown" and v.certificate is None

    def test_tree_enumeration_trips(self):
        v = recognize_directed_path(sun(3), "oracle", Budget(tree_limit=0))
        assert v.member == "unknown"

    def test_time_budget_never_lies(self):
        # zero wall budget may only degrade decided verdicts to unknown
        for g in (path_graph(4), sun(3), spider(3)):
            for cls, full in (
                (recognize_path, recognize_path(g)),
                (recognize_rooted_path, recognize_rooted_path(g)),
            ):
                tight = cls(g, Budget(time_budget_ms=0))
                assert tight.member in ("unknown", full.member)

    def test_unknown_members_carry_no_certificate(self):
        v = recognize_interval(spider(3), "oracle", Budget(tree_limit=1))
        assert v.certificate is None


class TestRouteMerging:
    def test_decided_conflict_raises(self):
        yes = ClassVerdict("interval", "yes", "theorem")
        no = ClassVerdict("interval", "no", "oracle")
        with pytest.raises(RouteDisagreement):
            _merge_routes(yes, no)

    def test_oracle_yes_wins_for_certificate(self):
        t = ClassVerdict("interval", "yes", "theorem")
        o = ClassVerdict("interval", "yes", "oracle", certificate="tree")
        assert _merge_routes(t, o) is o

    def test_theorem_decides_over_unknown_oracle(self):
        t = ClassVerdict("interval", "no", "theorem", certificate="witness")
        o = ClassVerdict("interval", "unknown", "oracle")
        assert _merge_routes(t, o) is t

    def test_unknown_theorem_defers_to_oracle(self):
        t = ClassVerdict("directed_path", "unknown", "theorem")
        o = ClassVerdict("directed_path", "no", "oracle")
        assert _merge_routes(t, o) is o

    def test_both_unknown_stays_unknown(self):
        t = ClassVerdict("directed_path", "unknown", "theorem")
        o = ClassVerdict("directed_path", "unknown", "oracle")
        assert _merge_routes(t, o).member == "unknown"


class TestDisconnected:
    def test_two_paths_are_interval(self):
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
        v = recognize_interval(g, "both")
        # a single clique tree cannot span two components, so yes has no cert
        assert v.member == "yes" and v.certificate is None

    def test_failing_component_is_named(self):
        sun_edges = [(a + 4, b + 4) for (a, b) in sun(3).edges()]
        g = Graph(10, [(0, 1), (1, 2), (2, 3)] + sun_edges)
        assert recognize_path(g).member == "yes"
        v = recognize_directed_path(g, "oracle")
        assert v.member == "no"
        assert v.certificate.component == (4, 5, 6, 7, 8, 9)
        vt = recognize_interval(g, "theorem")
        assert vt.member == "no"
        assert vt.certificate.members == (7, 8, 9)

    def test_isolated_vertices(self):
        g = Graph(3, [])
        assert recognize_interval(g, "both").member == "yes"
        assert recognize_rooted_path(g).member == "yes"


class TestClassify:
    def freeze(self, g, expected):
        v = classify(g)
        assert {c: v[c].member for c in expected} == expected

    def test_named_family_table(self):
        yes_all = {c: "yes" for c in CLASS_CHAIN}
        self.freeze(path_graph(4), yes_all)
        self.freeze(complete_graph(4), yes_all)
        self.freeze(
            spider(3),
            {"chordal": "yes", "interval": "no", "rooted_path": "yes",
             "directed_path": "yes", "path": "yes"},
        )
        self.freeze(
            spider(4),
            {"chordal": "yes", "interval": "no", "rooted_path": "yes",
             "directed_path": "yes", "path": "yes"},
        )
        self.freeze(
            sun(3),
            {"chordal": "yes", "interval": "no", "rooted_path": "no",
             "directed_path": "no", "path": "yes"},
        )
        self.freeze(
            f23(),
            {"chordal": "yes", "interval": "no", "rooted_path": "no",
             "directed_path": "yes", "path": "yes"},
        )
        self.freeze(
            gadget(),
            {"chordal": "yes", "interval": "no", "rooted_path": "no",
             "directed_path": "yes", "path": "yes"},
        )

    def test_holes_fail_everywhere(self):
        for n in (4, 5, 6):
            v = classify(cycle_graph(n))
            assert all(w.member == "no" for w in v.values())
            assert all(w.certificate.hole is not None for w in v.values())

    def test_empty_and_trivial(self):
        for g in (Graph(0, []), Graph(1, []), Graph(2, [(0, 1)])):
            assert all(w.member == "yes" for w in classify(g).values())

    def test_chain_monotone_on_mixed_input(self):
        v = classify(Graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]))
        assert all(w.member == "yes" for w in v.values())


class TestExhaustive:
    def test_small_graphs_match_brute_force(self):
        """Every recognizer against literal tree enumeration, n <= 5.

        This is the two-route crosscheck at desk scale: the interval and
        directed-path theorem routes (asteroidal predicates) must agree
        with definitional search over every clique tree.
        """
        for n in range(1, 6):
            for g in connected_chordal_graphs(n):
                v = classify(g)
                assert all(w.member in ("yes", "no") for w in v.values())
                trees = list(enumerate_clique_trees(g))
                brute = {
                    "interval": any(is_clique_path(t) for t in trees),
                    "path": any(is_clique_path_tree(t) for t in trees),
                    "directed_path": any(
                        is_clique_path_tree(t) and orient_directed(t) for t in trees
                    ),
                    "rooted_path": any(
                        is_clique_path_tree(t) and orient_rooted(t) for t in trees
                    ),
                }
                for cls, want in brute.items():
                    assert v[cls].member == ("yes" if want else "no"), (g.edges(), cls)

    def test_six_vertex_routes_agree(self):
        # both routes run inside classify; a disagreement would raise
        count = 0
        for g in connected_chordal_graphs(6):
            v = classify(g)
            assert all(w.member in ("yes", "no") for w in v.values())
            count += 1
        assert count == 13302
