"""Extend a k-edge colouring of the semi-core to the whole graph.

Vertices outside the semi-core are added one at a time. For the active
vertex ``u`` the uncoloured edges ``uv`` towards already placed vertices are
coloured one by one while two properties are kept:

  (P1) every pending edge ``uv`` has a colour missing at both ``u`` and ``v``;
  (P2) at most one pending edge has exactly one such colour.

Each step either colours an edge directly (case 1) or first exchanges two
colours along an alternating path and then colours an edge (case 2). Every
choice the procedure leaves open is resolved towards the smallest colour or
vertex id, so results are reproducible.

With ``check=True`` every step re-verifies the properties, properness and the
counting facts case 2 relies on, raising :class:`ExtensionInvariantError` on
the first breach.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .colouring import PartialEdgeColouring, kempe_swap, lowest_colour, verify_proper
from .graph import Graph, SemiCoreDecomposition

logger = logging.getLogger(__name__)


class ExtensionInvariantError(RuntimeError):
    """An invariant of the extension failed; this indicates a bug."""


@dataclass
class ExtensionStats:
    vertices: int = 0
    case1: int = 0
    case2: int = 0
    checkpoints: int = 0


@dataclass
class ExtensionState:
    """Colouring in progress around one active vertex.

    ``working_set`` holds the placed neighbours ``v`` of ``active_vertex``
    whose edge to it is still uncoloured, in ascending order.
    """

    colouring: PartialEdgeColouring
    active_vertex: int
    working_set: list[int] = field(default_factory=list)
    swaps: int = 0

    def pair_masks(self) -> list[tuple[int, int]]:
        """``(v, F(u) ∩ F(v))`` for every ``v`` in the working set."""
        c = self.colouring
        fu = c.missing_mask(self.active_vertex)
        return [(v, fu & c.missing_mask(v)) for v in self.working_set]


def check_properties(state: ExtensionState) -> None:
    """Raise unless (P1), (P2) and partial properness hold."""
    single = []
    for v, mask in state.pair_masks():
        if not mask:
            raise ExtensionInvariantError(
                f"(P1) broken: edge {state.active_vertex}-{v} has no common missing colour")
        if mask.bit_count() == 1:
            single.append(v)
    if len(single) > 1:
        raise ExtensionInvariantError(
            f"(P2) broken at vertex {state.active_vertex}: edges to {single} "
            "each have a single common missing colour")
    verdict = verify_proper(state.colouring)
    if not verdict:
        raise ExtensionInvariantError(f"colouring became improper: {verdict.describe()}")


def try_case1(state: ExtensionState) -> Optional[tuple[int, int]]:
    """Find ``(colour, v)`` to colour directly, or ``None`` if case 2 applies.

    A colour qualifies when at most one pending edge with at most two common
    missing colours offers it. The smallest qualifying colour is used, on the
    pending edge with the fewest common missing colours that contains it.
    """
    sets = state.pair_masks()
    union = 0
    for _, mask in sets:
        union |= mask
    colour = 0
    while union:
        if union & 1:
            bit = 1 << colour
            small = sum(1 for _, mask in sets if mask & bit and mask.bit_count() <= 2)
            if small <= 1:
                _, v = min((mask.bit_count(), v) for v, mask in sets if mask & bit)
                return colour, v
        union >>= 1
        colour += 1
    return None


def do_case2(state: ExtensionState, check: bool = False) -> tuple[int, int, int, int]:
    """Swap along an alternating path, then colour one pending edge.

    Picks the pending ``w`` with the fewest common missing colours, ``a`` the
    smallest of them and ``b`` the smallest colour missing at the active
    vertex but at none of the pending edges. Returns ``(w, a, b, w_star)``
    where ``w_star`` is the far end of the swapped path.
    """
    c = state.colouring
    u = state.active_vertex
    sets = state.pair_masks()
    union = 0
    for _, mask in sets:
        union |= mask
    fu = c.missing_mask(u)
    if check:
        if union.bit_count() > len(sets):
            raise ExtensionInvariantError(
                f"case 2 at {u}: {union.bit_count()} offered colours exceed "
                f"{len(sets)} pending edges")
        if fu.bit_count() < len(sets) + 1:
            raise ExtensionInvariantError(
                f"case 2 at {u}: only {fu.bit_count()} missing colours for "
                f"{len(sets)} pending edges")
    spare = fu & ~union
    if not spare:
        raise ExtensionInvariantError(f"case 2 at {u}: no colour b available")
    b = lowest_colour(spare)
    size, w = min((mask.bit_count(), v) for v, mask in sets)
    if not size:
        raise ExtensionInvariantError(f"case 2 at {u}: edge {u}-{w} has no common missing colour")
    a = lowest_colour(dict(sets)[w])
    w_star = kempe_swap(c, w, a, b)
    c.assign(u, w, b)
    state.working_set.remove(w)
    state.swaps += 1
    return w, a, b, w_star


def colour_one_vertex(state: ExtensionState, check: bool = False,
                      stats: Optional[ExtensionStats] = None) -> ExtensionState:
    """Colour every pending edge at the active vertex; mutates ``state``."""
    c = state.colouring
    u = state.active_vertex
    k = c.k
    if c.graph.degree(u) > k - 1:
        raise ValueError(f"vertex {u} has degree {c.graph.degree(u)} > k-1 = {k - 1}")
    while state.working_set:
        if check:
            check_properties(state)
            if stats is not None:
                stats.checkpoints += 1
        step = try_case1(state)
        if step is not None:
            colour, v = step
            c.assign(u, v, colour)
            state.working_set.remove(v)
            logger.debug("vertex %d: case 1, edge %d-%d gets %d", u, u, v, colour)
            if stats is not None:
                stats.case1 += 1
        else:
            w, a, b, w_star = do_case2(state, check)
            logger.debug("vertex %d: case 2, swap %d/%d from %d to %d, edge %d-%d gets %d",
                         u, a, b, w, w_star, u, w, b)
            if stats is not None:
                stats.case2 += 1
    if check:
        check_properties(state)
        if state.swaps > max(k - 1, 0):
            raise ExtensionInvariantError(
                f"vertex {u} needed {state.swaps} swaps, more than k-1 = {k - 1}")
    return state


def extend(graph: Graph, dec: SemiCoreDecomposition, c_prime: PartialEdgeColouring,
           k: int, check: bool = False,
           stats: Optional[ExtensionStats] = None) -> PartialEdgeColouring:
    """Extend a complete proper k-colouring of ``dec.semi_core`` to ``graph``.

    Edges inside the semi-core may be recoloured by swaps, so the result is
    only guaranteed to be proper, not to agree with ``c_prime``.

    Raises:
        ValueError: if ``c_prime`` is not a complete proper k-colouring of the
            semi-core, or a vertex outside the core has degree above ``k - 1``.
    """
    if c_prime.graph != dec.semi_core:
        raise ValueError("c_prime does not colour the semi-core of this decomposition")
    if c_prime.k != k:
        raise ValueError(f"c_prime uses palette size {c_prime.k}, expected {k}")
    verdict = verify_proper(c_prime, require_complete=True)
    if not verdict:
        raise ValueError(f"c_prime is not a proper colouring: {verdict.describe()}")
    in_core = set(dec.core_vertices)
    for u in range(graph.n):
        if u not in in_core and graph.degree(u) > k - 1:
            raise ValueError(
                f"vertex {u} lies outside the core but has degree {graph.degree(u)} > k-1")

    colouring = PartialEdgeColouring(graph, k)
    labels = dec.semi_core_labels
    for (x, y), colour in zip(dec.semi_core.edges, c_prime.colours):
        colouring.assign(labels[x], labels[y], colour)

    placed = bytearray(graph.n)
    for u in labels:
        placed[u] = 1
    for u in dec.excluded_order:
        if placed[u]:
            raise ValueError(f"vertex {u} is both in the semi-core and excluded")
        state = ExtensionState(colouring, u, [v for v in graph.adj[u] if placed[v]])
        placed[u] = 1
        if check:
            for v in state.working_set:
                if colouring.missing_mask(v).bit_count() < 2:
                    raise ExtensionInvariantError(
                        f"neighbour {v} of {u} misses fewer than two colours at start")
        colour_one_vertex(state, check, stats)
        if stats is not None:
            stats.vertices += 1

    if check:
        verdict = verify_proper(colouring, require_complete=True)
        if not verdict:
            raise ExtensionInvariantError(f"extension result invalid: {verdict.describe()}")
    elif not colouring.is_complete():
        missing = colouring.uncoloured_edges()[0]
        raise ValueError(f"edge {missing} was never reached; excluded_order is incomplete")
    return colouring
