"""Exact k-edge colouring of a small graph by pruned backtracking.

Edges touching two maximum-degree vertices are coloured first, then those
touching one, then the rest, each group in canonical order; every edge tries
the smallest feasible colour first. In a semi-core the maximum-degree
vertices are exactly the core, whose edges are the constrained ones.

After each assignment every later edge sharing an endpoint must still have a
colour missing at both of its ends, otherwise the branch is cut. The first
edge only tries colour 1, since colour classes are interchangeable.
The search is exhaustive, so a failed search proves non-colourability.
"""

from __future__ import annotations

from typing import Optional

from .colouring import PartialEdgeColouring
from .graph import Graph


def edge_order(graph: Graph) -> list[int]:
    """Edge ids in the order the search colours them."""
    degrees = graph.degrees()
    top = max(degrees, default=0)
    return sorted(range(graph.m), key=lambda eid: (
        -sum(degrees[x] == top for x in graph.edges[eid]), eid))


def _search(graph: Graph, k: int) -> tuple[Optional[list[int]], int]:
    m = graph.m
    if m == 0:
        return [], 1
    if k <= 0:
        return None, 1
    order = edge_order(graph)
    edges = [graph.edges[eid] for eid in order]
    position = {eid: i for i, eid in enumerate(order)}
    later = []
    for i, (u, v) in enumerate(edges):
        nbrs = {position[f] for x in (u, v) for _, f in graph.incident[x]}
        later.append(tuple(sorted(j for j in nbrs if j > i)))
    full = (1 << (k + 1)) - 2
    used = [0] * graph.n
    colours = [0] * m
    cand = [0] * m
    cand[0] = 0b10
    nodes = 1
    i = 0
    while True:
        if i == m:
            out = [0] * m
            for pos, eid in enumerate(order):
                out[eid] = colours[pos]
            return out, nodes
        if not cand[i]:
            i -= 1
            if i < 0:
                return None, nodes
            u, v = edges[i]
            bit = 1 << colours[i]
            used[u] ^= bit
            used[v] ^= bit
            continue
        bit = cand[i] & -cand[i]
        cand[i] ^= bit
        u, v = edges[i]
        used[u] |= bit
        used[v] |= bit
        colours[i] = bit.bit_length() - 1
        nodes += 1
        for f in later[i]:
            x, y = edges[f]
            if not full & ~(used[x] | used[y]):
                used[u] ^= bit
                used[v] ^= bit
                break
        else:
            i += 1
            if i < m:
                x, y = edges[i]
                cand[i] = full & ~(used[x] | used[y])


def solve_exact(graph: Graph, k: int) -> Optional[PartialEdgeColouring]:
    """Return a complete proper k-edge colouring of ``graph``, or ``None``.

    Deterministic: the same graph and ``k`` always give the same colouring.
    """
    if k < 0:
        raise ValueError(f"palette size must be non-negative, got {k}")
    colours, _ = _search(graph, k)
    if colours is None:
        return None
    return PartialEdgeColouring.from_colours(graph, k, colours)


def count_search_nodes(graph: Graph, k: int) -> int:
    """Partial assignments visited by :func:`solve_exact`, the root included."""
    if k < 0:
        raise ValueError(f"palette size must be non-negative, got {k}")
    return _search(graph, k)[1]
