"""Desk-scale graph censuses.

Two sources feed the surveys: built-in exhaustive enumeration of every
labeled connected chordal graph for n up to 7, and graph6 files for
anything larger (produced externally, one graph per line). The labeled
counts for the built-in range are pinned here and asserted in tests.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graphs import Graph, GraphError, iter_graph6_lines, mcs_order, parse_graph6, peo_check

__all__ = [
    "ENUMERATION_LIMIT",
    "LABELED_CONNECTED_CHORDAL",
    "enumerate_labeled",
    "load_census",
    "read_census",
]

# labeled connected chordal graphs on n vertices, n = 1..7
LABELED_CONNECTED_CHORDAL = {
    1: 1,
    2: 1,
    3: 4,
    4: 35,
    5: 541,
    6: 13302,
    7: 489287,
}

ENUMERATION_LIMIT = 7


def _connected(masks: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every connected chordal graph on vertex set 0..n-1, exactly once,
    in increasing edge-mask order (edges ranked lexicographically).

    Exhaustive over all 2^(n(n-1)/2) labeled graphs, so n is capped at
    ENUMERATION_LIMIT; larger sweeps must come from a census file.
    """
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    if n > ENUMERATION_LIMIT:
        raise GraphError(
            f"labeled enumeration is capped at n = {ENUMERATION_LIMIT}; "
            "use a graph6 census file for larger n"
        )
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        masks = [0] * n
        m = mask
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            a, b = pairs[k]
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        if not _connected(masks, n):
            continue
        if peo_check(masks, mcs_order(masks, n)[::-1]) is not None:
            continue
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def read_census(text: str) -> Iterator[tuple[int, Graph]]:
    """(line number, graph) for every graph6 line in `text`.

    Blank lines and '>' comments are skipped. A malformed line aborts with
    a GraphError naming the line number.
    """
    for lineno, line in iter_graph6_lines(text):
        try:
            yield lineno, parse_graph6(line)
        except GraphError as e:
            raise GraphError(f"line {lineno}: {e}") from e


def load_census(path) -> Iterator[tuple[int, Graph]]:
    """read_census over the contents of a file path."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    yield from read_census(text)
