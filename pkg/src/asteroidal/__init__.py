"""Chordal-graph structure toolkit.

Clique trees and their orientations, asteroidal triples and quadruples,
strong paths with their attachment certificates, recognizers for the
interval / path / directed path / rooted path hierarchy, named graph
families, and exhaustive small-graph survey machinery.
"""

from .asteroids import (
    AsteroidWitness,
    AvoidingPath,
    ParallelQuadrupleWitness,
    StrongTripleWitness,
    WeakQuadrupleWitness,
    avoiding_path,
    find_asteroidal_quadruples,
    find_asteroidal_triples,
    find_parallel_asteroidal_quadruples,
    find_strong_asteroidal_triples,
    find_weak_asteroidal_quadruples,
)
from .budgets import UNKNOWN, Budget
from .cliquetree import (
    CliqueTree,
    CliqueTreeError,
    Separator,
    TreeBudgetExceeded,
    asteroid_subtree,
    build_clique_tree,
    enumerate_clique_trees,
    is_clique_path,
    is_clique_path_tree,
    orient_directed,
    orient_rooted,
    reduced_subtree,
    separator_multiplicity,
    to_dot,
    tree_separators,
    vertex_subtree,
)
from .census import enumerate_labeled, load_census, read_census
from .families import FamilySpec, f23, gadget, generate, spider, spider_tip, sun
from .recognize import (
    CLASS_CHAIN,
    ClassVerdict,
    ExhaustionCertificate,
    RouteDisagreement,
    classify,
    recognize_directed_path,
    recognize_interval,
    recognize_path,
    recognize_rooted_path,
)
from .survey import (
    CHECK_NAMES,
    HuntResult,
    SurveyRecord,
    SurveyResult,
    check_lemma5,
    hunt_conjecture,
    survey,
)
from .graphs import (
    ChordalityWitness,
    Graph,
    Graph6Error,
    GraphError,
    NotChordalError,
    chordality,
    components_after_removal,
    is_chordal,
    is_connected,
    maximal_cliques,
    parse_edge_list,
    parse_graph6,
    parse_graph_text,
    write_edge_list,
    write_graph6,
)
from .strongpath import (
    AttachmentRecord,
    StrongPathWitness,
    find_strong_path,
    verify_strong_path_witness,
)

__version__ = "0.1.0"
