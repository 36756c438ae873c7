"""Immutable simple graphs, induced subgraphs and the semi-core decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


class Graph:
    """Simple undirected graph on the vertices ``0 .. n-1``.

    Edges are stored canonically as ``(min, max)`` pairs in sorted order; the
    position of an edge in :attr:`edges` is its edge id. Instances are not
    meant to be mutated after construction.
    """

    __slots__ = ("n", "edges", "adj", "incident", "_edge_id")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        # Trusted constructor: callers go through build_graph() for validation.
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self._edge_id = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append((v, eid))
            incident[v].append((u, eid))
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.incident = tuple(tuple(sorted(a)) for a in incident)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbours(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_id

    def edge_id(self, u: int, v: int) -> int:
        """Return the id of edge ``uv``; raises ``KeyError`` if absent."""
        return self._edge_id[(min(u, v), max(u, v))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_list`` and build a :class:`Graph` on ``n`` vertices.

    Self-loops, vertices outside ``[0, n)`` and repeated edges (in either
    orientation) are rejected with a :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
    return Graph(n, sorted(seen))


def max_degree(graph: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless and empty graphs."""
    return max((len(a) for a in graph.adj), default=0)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[S]`` relabelled onto ``0 .. |S|-1``.

    The second element maps new labels back to original vertices:
    ``labels[i]`` is the vertex of ``graph`` that became ``i``. Labels are
    assigned in ascending order of the original ids.
    """
    labels = tuple(sorted(set(vertices)))
    for u in labels:
        if not 0 <= u < graph.n:
            raise GraphError(f"vertex {u} is not in the graph")
    index = {u: i for i, u in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in graph.edges if u in index and v in index]
    # Relabelling is monotone, so the canonical order survives.
    return Graph(len(labels), edges), labels


@dataclass(frozen=True)
class SemiCoreDecomposition:
    """Core ``X``, semi-core ``H = G[X ∪ N(X)]`` and the remaining vertices.

    Attributes:
        delta: maximum degree of the decomposed graph.
        core_vertices: ``X``, the vertices of maximum degree, ascending.
        semi_core: ``H`` relabelled onto ``0 .. q-1``.
        semi_core_labels: original id of each semi-core vertex.
        excluded_order: vertices outside ``X ∪ N(X)`` in the order the
            extension processes them.
    """

    delta: int
    core_vertices: tuple[int, ...]
    semi_core: Graph
    semi_core_labels: tuple[int, ...]
    excluded_order: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.core_vertices)

    @property
    def q(self) -> int:
        return self.semi_core.n


def decompose(graph: Graph) -> SemiCoreDecomposition:
    """Split ``graph`` into its semi-core and the vertices outside it.

    Edgeless graphs decompose with every vertex in the core and ``H = G``.
    """
    delta = max_degree(graph)
    core = tuple(u for u in range(graph.n) if len(graph.adj[u]) == delta)
    inside = [False] * graph.n
    for u in core:
        inside[u] = True
        for v in graph.adj[u]:
            inside[v] = True
    semi_core, labels = induced_subgraph(graph, (u for u in range(graph.n) if inside[u]))
    excluded = tuple(u for u in range(graph.n) if not inside[u])
    return SemiCoreDecomposition(delta, core, semi_core, labels, excluded)


def trivial_decomposition(graph: Graph) -> SemiCoreDecomposition:
    """An empty "semi-core" with every vertex queued for extension.

    Not a true decomposition (the core is empty); it lets the extension build
    a colouring from scratch when every vertex has degree below the palette
    size.
    """
    return SemiCoreDecomposition(
        max_degree(graph), (), Graph(0, ()), (), tuple(range(graph.n)))


def semi_core_edge_bound(k: int, p: int) -> int:
    """Upper bound ``floor(k^2 p / 2)`` on the semi-core edges when ``Δ = k``."""
    return (k * k * p) // 2
