"""Decision pipeline, chromatic index and an independent brute-force oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .colouring import PartialEdgeColouring
from .extension import ExtensionStats, extend
from .graph import Graph, decompose, max_degree, semi_core_edge_bound, trivial_decomposition
from .semicore import solve_exact

SHORTCUT_NONE = "none"
SHORTCUT_LOW = "delta_le_k_minus_1"
SHORTCUT_HIGH = "delta_ge_k_plus_1"


@dataclass
class SolveReport:
    """Result of :func:`solve`.

    ``q`` and ``semi_core_edges`` are ``None`` when a shortcut skipped the
    decomposition. ``timings`` holds seconds per phase (``decompose``,
    ``semicore``, ``extend``, ``total``).
    """

    k: int
    decision: bool
    witness: Optional[PartialEdgeColouring]
    delta: int
    p: int
    q: Optional[int]
    semi_core_edges: Optional[int]
    shortcut: str
    timings: dict[str, float] = field(default_factory=dict)
    extension: ExtensionStats = field(default_factory=ExtensionStats)

    def summary(self) -> dict:
        """Timing-free fields, suitable for comparing runs."""
        return {
            "k": self.k,
            "decision": self.decision,
            "delta": self.delta,
            "p": self.p,
            "q": self.q,
            "semi_core_edges": self.semi_core_edges,
            "shortcut": self.shortcut,
            "witness": list(self.witness.colours) if self.witness is not None else None,
        }


def solve(graph: Graph, k: int, check: bool = False) -> SolveReport:
    """Decide whether ``graph`` has a k-edge colouring and build one if so.

    Maximum degree below ``k`` is always colourable and above ``k`` never is.
    Otherwise the semi-core is solved exactly and its colouring extended.
    ``check`` turns on the extension's step-by-step invariant checks.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    t0 = time.perf_counter()
    degrees = graph.degrees()
    delta = max(degrees, default=0)
    p = sum(1 for d in degrees if d == delta)
    stats = ExtensionStats()

    if delta >= k + 1:
        return SolveReport(k, False, None, delta, p, None, None, SHORTCUT_HIGH,
                           {"total": time.perf_counter() - t0}, stats)

    if delta <= k - 1:
        t1 = time.perf_counter()
        witness = extend(graph, trivial_decomposition(graph),
                         PartialEdgeColouring(Graph(0, ()), k), k, check, stats)
        t2 = time.perf_counter()
        return SolveReport(k, True, witness, delta, p, None, None, SHORTCUT_LOW,
                           {"extend": t2 - t1, "total": t2 - t0}, stats)

    t1 = time.perf_counter()
    dec = decompose(graph)
    t2 = time.perf_counter()
    h = dec.semi_core
    if h.m > semi_core_edge_bound(k, dec.p):
        raise RuntimeError(
            f"semi-core has {h.m} edges, above the bound {semi_core_edge_bound(k, dec.p)}")
    c_prime = solve_exact(h, k)
    t3 = time.perf_counter()
    timings = {"decompose": t2 - t1, "semicore": t3 - t2}
    if c_prime is None:
        timings["total"] = t3 - t0
        return SolveReport(k, False, None, delta, dec.p, dec.q, h.m, SHORTCUT_NONE,
                           timings, stats)
    witness = extend(graph, dec, c_prime, k, check, stats)
    t4 = time.perf_counter()
    timings["extend"] = t4 - t3
    timings["total"] = t4 - t0
    return SolveReport(k, True, witness, delta, dec.p, dec.q, h.m, SHORTCUT_NONE,
                       timings, stats)


def chromatic_index(graph: Graph, check: bool = False) -> tuple[int, PartialEdgeColouring]:
    """Return the chromatic index (``Δ`` or ``Δ + 1``) with a witness colouring."""
    if graph.m == 0:
        raise ValueError("chromatic index is undefined here for a graph without edges")
    delta = max_degree(graph)
    report = solve(graph, delta, check)
    if report.decision:
        return delta, report.witness
    report = solve(graph, delta + 1, check)
    if not report.decision:  # pragma: no cover - impossible for simple graphs
        raise RuntimeError("no (Δ+1)-edge colouring found")
    return delta + 1, report.witness


def oracle_solve(graph: Graph, k: int) -> Optional[PartialEdgeColouring]:
    """Plain exhaustive search over all edges; meant for tiny graphs only.

    Shares nothing with the decomposition pipeline and is used to cross-check
    it in tests.
    """
    m = graph.m
    edges = graph.edges
    earlier: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i):
            if set(edges[i]) & set(edges[j]):
                earlier[i].append(j)
    colours = [0] * m

    def place(i: int) -> bool:
        if i == m:
            return True
        taken = {colours[j] for j in earlier[i]}
        for colour in range(1, k + 1):
            if colour not in taken:
                colours[i] = colour
                if place(i + 1):
                    return True
        colours[i] = 0
        return False

    if not place(0):
        return None
    return PartialEdgeColouring.from_colours(graph, k, colours)
