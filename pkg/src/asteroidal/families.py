"""Named graph families used throughout the test harness and CLI.

Each generator documents its exact labeling so downstream expectations
(clique structure, asteroidal sets, recognizer verdicts) are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance: sun(k), spider(legs, leg_length), f23, or
    gadget(ell)."""

    family: str
    k: Optional[int] = None
    legs: Optional[int] = None
    leg_length: int = 2
    ell: int = 1


def sun(k: int) -> Graph:
    """Sun on 2k vertices: clique a_1..a_k (labels 0..k-1) plus a stable set
    s_1..s_k (labels k..2k-1) where s_i sees a_i and a_{i+1}, indices mod k.

    Requires k >= 3. The 3-sun is the smallest; odd suns are path graphs but
    not directed path graphs, and no sun is a rooted path graph.
    """
    if k < 3:
        raise GraphError(f"sun needs k >= 3, got {k}")
    edges = list(itertools.combinations(range(k), 2))
    for i in range(k):
        edges.append((k + i, i))
        edges.append((k + i, (i + 1) % k))
    return Graph(2 * k, edges)


def spider(legs: int, leg_length: int = 2) -> Graph:
    """Spider tree: center (label 0) with `legs` disjoint paths of
    `leg_length` vertices hanging off it. Leg i occupies labels
    1 + i*leg_length .. (i+1)*leg_length, ending at its tip.

    Requires legs >= 3 and leg_length >= 1. With the default length 2 the
    tips form an asteroidal set of size `legs`.
    """
    if legs < 3:
        raise GraphError(f"spider needs legs >= 3, got {legs}")
    if leg_length < 1:
        raise GraphError(f"spider needs leg_length >= 1, got {leg_length}")
    edges = []
    for i in range(legs):
        start = 1 + i * leg_length
        edges.append((0, start))
        for j in range(leg_length - 1):
            edges.append((start + j, start + j + 1))
    return Graph(1 + legs * leg_length, edges)


def spider_tip(legs: int, leg_length: int = 2, i: int = 0) -> int:
    """Label of the tip of leg i in spider(legs, leg_length)."""
    return (i + 1) * leg_length


def f23() -> Graph:
    """The nine-vertex graph built from a clique of five with four pendant
    riders in chain position.

    Labels: the clique is c_0..c_4 = 0..4; rider r_k = 5+k (k = 0..3) sees
    exactly c_k and c_{k+1}. The riders form a stable set. Maximal cliques
    are the 5-clique plus the four triangles {r_k, c_k, c_{k+1}}.

    This is the smallest graph where two vertices (r_0 and r_3) are linked by
    a strong path that needs a chain attachment (the clique-extension kind):
    the disjoint induced paths r_0-c_0-c_4-r_3 and r_0-c_1-c_3-r_3 meet in
    the four-clique {c_0, c_1, c_3, c_4}, no single outside vertex sees
    exactly three of those four, and the family (z_1; z'_1, z'_2) =
    (c_2; r_1, r_2) satisfies the chain conditions with t = 0. The graph is
    a directed path graph but not a rooted path graph, and its riders form a
    weak (indeed parallel) asteroidal quadruple.
    """
    edges = list(itertools.combinations(range(5), 2))
    for j in range(4):
        edges.append((5 + j, j))
        edges.append((5 + j, j + 1))
    return Graph(9, edges)


def strong_path_block() -> tuple[Graph, dict[str, int]]:
    """The eight-vertex building block whose endpoints are linked by a strong
    path through one four-clique with a type-1 attachment.

    Labels: u=0, v=1, x1=2, x2=3, y1=4, y2=5, z=6, z'=7.
    u sees x1, y1; v sees x2, y2; {x1, x2, y1, y2} is a clique;
    z sees x1, y1, x2 (not y2); z' sees x2, y2, x1 (not y1); z and z' are
    non-adjacent and neither sees u or v.
    """
    names = {"u": 0, "v": 1, "x1": 2, "x2": 3, "y1": 4, "y2": 5, "z": 6, "zp": 7}
    edges = [
        (0, 2), (0, 4),
        (1, 3), (1, 5),
        (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
        (6, 2), (6, 4), (6, 3),
        (7, 3), (7, 5), (7, 2),
    ]
    return Graph(8, edges), names


def gadget(ell: int = 1) -> Graph:
    """Two strong-path blocks joined through a connector path.

    Block A occupies labels 0..7 and block B labels 8..15, both laid out as
    in `strong_path_block` (endpoints u=0, v=1 and u'=8, v'=9). The connector
    path v_1..v_ell occupies labels 16..15+ell; v_1 is complete to block A's
    interior {x1, x2, y1, y2, z, z'} = {2..7} and v_ell to block B's interior
    {10..15}. Requires ell >= 1 (with ell = 1 one vertex plays both roles).

    The endpoints u, v, u', v' form a parallel asteroidal quadruple (the
    block strong paths survive in the joined graph, and the connector routes
    the avoiding paths), yet the graph is not a rooted path graph. One fixed
    instantiation of the block is used; the family admits many more.
    """
    if ell < 1:
        raise GraphError(f"gadget needs ell >= 1, got {ell}")
    block, _ = strong_path_block()
    edges = list(block.edges())
    edges += [(a + 8, b + 8) for a, b in block.edges()]
    first = 16
    last = 16 + ell - 1
    for j in range(ell - 1):
        edges.append((first + j, first + j + 1))
    edges += [(first, w) for w in range(2, 8)]
    edges += [(last, w + 8) for w in range(2, 8)]
    return Graph(16 + ell, edges)


_REQUIRED: dict[str, tuple[str, ...]] = {
    "sun": ("k",),
    "spider": ("legs",),
    "f23": (),
    "gadget": (),
}


def generate(spec: FamilySpec) -> Graph:
    """Materialize a FamilySpec. Raises GraphError on unknown family names or
    parameter violations."""
    if spec.family not in _REQUIRED:
        raise GraphError(f"unknown family {spec.family!r}")
    for name in _REQUIRED[spec.family]:
        if getattr(spec, name) is None:
            raise GraphError(f"family {spec.family!r} needs parameter {name}")
    if spec.family == "sun":
        return sun(spec.k)
    if spec.family == "spider":
        return spider(spec.legs, spec.leg_length)
    if spec.family == "f23":
        return f23()
    return gadget(spec.ell)
