"""Instance generators and the graph / colouring text formats.

Random generators draw from SplitMix64 (Steele, Lea and Flood) so that an
instance is determined by its parameters and seed alone, independent of the
Python ``random`` module:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                       (all arithmetic mod 2**64)

``below(n)`` is ``next() % n`` and ``uniform()`` is ``(next() >> 11) / 2**53``.

Graph format::

    c optional comment lines
    p <n> <m>
    e <u> <v>          (m lines, 0-based vertices)

Colouring format: one ``<u> <v> <colour>`` line per coloured edge, in
canonical edge order. Colours are 1-based.
"""

from __future__ import annotations

from typing import Optional

from .colouring import ColouringError, PartialEdgeColouring
from .graph import Graph, GraphError, build_graph

_MASK64 = (1 << 64) - 1


class FormatError(ValueError):
    """Malformed instance text; ``lineno`` is 1-based (0 for end of input)."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def uniform(self) -> float:
        return (self.next() >> 11) / float(1 << 53)


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise ValueError(f"star needs at least one leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def gen_random(n: int, prob: float, seed: int) -> Graph:
    """G(n, prob): each pair ``u < v`` in lexicographic order is kept when
    ``uniform() < prob``."""
    if n < 0 or not 0.0 <= prob <= 1.0:
        raise ValueError(f"invalid random graph parameters n={n}, prob={prob}")
    rng = SplitMix64(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.uniform() < prob])


def gen_few_max_degree(p: int, k: int, n: int, seed: int) -> Graph:
    """Graph on ``n`` vertices with exactly ``p`` vertices of degree ``k``.

    Vertices ``0 .. p-1`` form the core. For ``k >= 2``:

    1. each core pair ``i < j`` is joined when ``below(3) == 0`` and both
       still have degree below ``k``;
    2. each core vertex in turn receives neighbours until its degree is
       ``k``: a new vertex is created unless ``below(2) == 0`` and some
       earlier non-core vertex of degree below ``k - 1`` is not yet adjacent,
       in which case ``below(len(candidates))`` picks one of those (listed in
       ascending order);
    3. every further vertex up to ``n`` is attached as a leaf to
       ``below(len(pool))`` of the non-core vertices of degree below
       ``k - 1`` (ascending), or left isolated if there are none.

    Step 3 only grows trees hanging off non-core vertices, so the semi-core
    does not depend on ``n``. Requires ``n >= p + k*p`` so that step 2 never
    runs out of vertices. For ``k == 1`` the core is a random perfect
    matching (``p`` even) and the rest is isolated.
    """
    if p < 1:
        raise ValueError("p must be at least 1: a graph with edges has a maximum-degree vertex")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    rng = SplitMix64(seed)
    if k == 1:
        if p % 2 or n < p:
            raise ValueError(f"k=1 needs an even p <= n, got p={p}, n={n}")
        order = list(range(p))
        for i in range(p - 1, 0, -1):
            j = rng.below(i + 1)
            order[i], order[j] = order[j], order[i]
        return build_graph(n, [(order[i], order[i + 1]) for i in range(0, p, 2)])
    if n < p + k * p:
        raise ValueError(f"need n >= p + k*p = {p + k * p} vertices, got n={n}")

    degree = [0] * n
    edges: list[tuple[int, int]] = []
    adjacent: set[tuple[int, int]] = set()

    def join(u: int, v: int) -> None:
        edges.append((u, v))
        adjacent.add((min(u, v), max(u, v)))
        degree[u] += 1
        degree[v] += 1

    for i in range(p):
        for j in range(i + 1, p):
            if rng.below(3) == 0 and degree[i] < k and degree[j] < k:
                join(i, j)

    created = p
    for i in range(p):
        while degree[i] < k:
            reuse = rng.below(2) == 0
            candidates = [v for v in range(p, created)
                          if degree[v] < k - 1 and (i, v) not in adjacent]
            if reuse and candidates:
                join(i, candidates[rng.below(len(candidates))])
            else:
                join(i, created)
                created += 1

    # Pool of non-core vertices that can still take a leaf; ascending order is
    # kept by appending and removing with list.pop at the chosen index.
    pool = [v for v in range(p, created) if degree[v] < k - 1]
    for v in range(created, n):
        if pool:
            idx = rng.below(len(pool))
            parent = pool[idx]
            join(parent, v)
            if degree[parent] >= k - 1:
                pool.pop(idx)
        if degree[v] < k - 1:
            pool.append(v)
    return build_graph(n, edges)


def write_graph(graph: Graph) -> str:
    lines = [f"p {graph.n} {graph.m}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if header is not None:
                raise FormatError("second header line", lineno)
            if len(fields) != 3:
                raise FormatError("header must be 'p <n> <m>'", lineno)
            n, m = _ints(fields[1:], lineno)
            if n < 0 or m < 0:
                raise FormatError("negative count in header", lineno)
            header = (n, m)
        elif tag == "e":
            if header is None:
                raise FormatError("edge line before header", lineno)
            if len(fields) != 3:
                raise FormatError("edge line must be 'e <u> <v>'", lineno)
            if len(edges) == header[1]:
                raise FormatError(f"more than the {header[1]} edges declared", lineno)
            u, v = _ints(fields[1:], lineno)
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise FormatError(f"vertex out of range in edge ({u}, {v})", lineno)
            if u == v:
                raise FormatError(f"self-loop ({u}, {v})", lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)
    if header is None:
        raise FormatError("missing 'p <n> <m>' header", 0)
    if len(edges) != header[1]:
        raise FormatError(f"header declares {header[1]} edges, found {len(edges)}", lineno)
    try:
        return build_graph(header[0], edges)
    except GraphError as exc:
        raise FormatError(str(exc), 0) from None


def write_colouring(colouring: PartialEdgeColouring) -> str:
    return "".join(f"{u} {v} {c}\n" for u, v, c in colouring.items() if c is not None)


def read_colouring(text: str, graph: Graph, k: Optional[int] = None) -> PartialEdgeColouring:
    """Parse a colouring of ``graph``; edges without a line stay uncoloured.

    With ``k=None`` the palette is the largest colour present. Colours above
    an explicit ``k`` raise :class:`ColouringError`.
    """
    colours: list[Optional[int]] = [None] * graph.m
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        if len(fields) != 3:
            raise FormatError("colouring line must be '<u> <v> <colour>'", lineno)
        u, v, colour = _ints(fields, lineno)
        if colour < 1:
            raise FormatError(f"colour {colour} is not positive", lineno)
        if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
            raise FormatError(f"({u}, {v}) is not an edge of the graph", lineno)
        eid = graph.edge_id(u, v)
        if colours[eid] is not None:
            raise FormatError(f"edge ({u}, {v}) coloured twice", lineno)
        colours[eid] = colour
    palette = max((c for c in colours if c is not None), default=0) if k is None else k
    for eid, c in enumerate(colours):
        if c is not None and c > palette:
            u, v = graph.edges[eid]
            raise ColouringError(f"edge ({u}, {v}) has colour {c} outside palette 1..{palette}")
    return PartialEdgeColouring.from_colours(graph, palette, colours)


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(fields)!r}", lineno) from None
