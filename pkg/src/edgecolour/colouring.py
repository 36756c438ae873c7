"""Partial edge colourings, missing-colour sets and Kempe-chain swaps.

Colours are the integers ``1 .. k``; ``None`` marks an uncoloured edge.
Missing-colour sets are kept per vertex as bitmasks (bit ``c`` set when some
incident edge has colour ``c``) and patched on every assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph


class ColouringError(ValueError):
    """An assignment would break the palette or properness."""


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    c = 0
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return frozenset(out)


def lowest_colour(mask: int) -> int:
    """Smallest colour in a non-empty colour mask."""
    return (mask & -mask).bit_length() - 1


class PartialEdgeColouring:
    """Assignment of colours ``1 .. k`` (or nothing) to the edges of a graph.

    :meth:`assign` refuses colours already present at either endpoint, so a
    colouring built through it stays proper. :meth:`from_colours` accepts
    arbitrary in-palette values, which is what :func:`verify_proper` is for.
    """

    def __init__(self, graph: Graph, k: int):
        if k < 0:
            raise ColouringError(f"palette size must be non-negative, got {k}")
        self.graph = graph
        self.k = k
        self._colours: list[Optional[int]] = [None] * graph.m
        self._count = [[0] * (k + 1) for _ in range(graph.n)]
        self._used = [0] * graph.n
        self.full_mask = (1 << (k + 1)) - 2

    @classmethod
    def from_colours(cls, graph: Graph, k: int,
                     colours: Sequence[Optional[int]]) -> PartialEdgeColouring:
        """Build a colouring from per-edge values without properness checks."""
        if len(colours) != graph.m:
            raise ColouringError(f"expected {graph.m} colours, got {len(colours)}")
        c = cls(graph, k)
        for eid, colour in enumerate(colours):
            if colour is not None:
                c._check_palette(colour)
                c._set(eid, colour)
        return c

    def copy(self) -> PartialEdgeColouring:
        return PartialEdgeColouring.from_colours(self.graph, self.k, self._colours)

    def _check_palette(self, colour: int) -> None:
        if not 1 <= colour <= self.k:
            raise ColouringError(f"colour {colour} outside palette 1..{self.k}")

    def _set(self, eid: int, colour: Optional[int]) -> None:
        u, v = self.graph.edges[eid]
        old = self._colours[eid]
        if old is not None:
            for x in (u, v):
                self._count[x][old] -= 1
                if not self._count[x][old]:
                    self._used[x] &= ~(1 << old)
        self._colours[eid] = colour
        if colour is not None:
            for x in (u, v):
                self._count[x][colour] += 1
                self._used[x] |= 1 << colour

    def assign(self, u: int, v: int, colour: int) -> None:
        """Colour edge ``uv``; any previous colour of ``uv`` is replaced."""
        self._check_palette(colour)
        eid = self.graph.edge_id(u, v)
        if self._colours[eid] == colour:
            return
        for x in (u, v):
            if self._used[x] >> colour & 1:
                raise ColouringError(f"colour {colour} already used at vertex {x}")
        self._set(eid, colour)

    def unassign(self, u: int, v: int) -> None:
        self._set(self.graph.edge_id(u, v), None)

    def colour(self, u: int, v: int) -> Optional[int]:
        return self._colours[self.graph.edge_id(u, v)]

    @property
    def colours(self) -> tuple[Optional[int], ...]:
        """Per-edge colours in edge-id order."""
        return tuple(self._colours)

    def used_mask(self, u: int) -> int:
        return self._used[u]

    def missing_mask(self, u: int) -> int:
        return self.full_mask & ~self._used[u]

    def neighbour_via(self, u: int, colour: int) -> Optional[int]:
        """Other endpoint of the edge at ``u`` with ``colour``, if any."""
        if not self._used[u] >> colour & 1:
            return None
        for v, eid in self.graph.incident[u]:
            if self._colours[eid] == colour:
                return v
        return None  # pragma: no cover - the mask says otherwise

    def is_complete(self) -> bool:
        return None not in self._colours

    def uncoloured_edges(self) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.graph.edges, self._colours) if c is None]

    def max_colour(self) -> int:
        return max((c for c in self._colours if c is not None), default=0)

    def items(self) -> Iterator[tuple[int, int, Optional[int]]]:
        for (u, v), c in zip(self.graph.edges, self._colours):
            yield u, v, c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialEdgeColouring):
            return NotImplemented
        return (self.graph == other.graph and self.k == other.k
                and self._colours == other._colours)

    def __repr__(self) -> str:
        done = sum(c is not None for c in self._colours)
        return f"PartialEdgeColouring(k={self.k}, coloured={done}/{self.graph.m})"


def missing_colours(colouring: PartialEdgeColouring, u: int) -> frozenset[int]:
    """Colours of ``1 .. k`` not used on any edge at ``u``."""
    return mask_to_set(colouring.missing_mask(u))


def common_missing(colouring: PartialEdgeColouring, u: int, v: int) -> frozenset[int]:
    """Colours missing at both ``u`` and ``v``."""
    if u == v:
        raise ValueError("common_missing needs two distinct vertices")
    return mask_to_set(colouring.missing_mask(u) & colouring.missing_mask(v))


def recompute_missing(colouring: PartialEdgeColouring, u: int) -> frozenset[int]:
    """From-scratch version of :func:`missing_colours`, ignoring the caches."""
    g = colouring.graph
    present = {colouring.colours[eid] for _, eid in g.incident[u]}
    return frozenset(c for c in range(1, colouring.k + 1) if c not in present)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_proper`.

    ``kind`` is ``None`` for a proper colouring, otherwise one of
    ``"conflict"`` (``vertex`` carries two ``edges`` of one colour),
    ``"uncoloured"`` (``edges`` holds the uncoloured edge) or ``"palette"``.
    """

    ok: bool
    kind: Optional[str] = None
    vertex: Optional[int] = None
    edges: tuple[tuple[int, int], ...] = ()
    colour: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "proper"
        if self.kind == "conflict":
            e, f = self.edges
            return (f"edges {e[0]}-{e[1]} and {f[0]}-{f[1]} share vertex {self.vertex} "
                    f"and colour {self.colour}")
        if self.kind == "uncoloured":
            (e,) = self.edges
            return f"edge {e[0]}-{e[1]} is uncoloured"
        (e,) = self.edges
        return f"edge {e[0]}-{e[1]} has colour {self.colour} outside the palette"


def verify_proper(colouring: PartialEdgeColouring, require_complete: bool = False) -> Verdict:
    """Check properness by scanning every vertex; ignores the cached masks."""
    g = colouring.graph
    colours = colouring.colours
    for (u, v), c in zip(g.edges, colours):
        if c is not None and not 1 <= c <= colouring.k:
            return Verdict(False, "palette", None, ((u, v),), c)
    for u in range(g.n):
        seen: dict[int, int] = {}
        for v, eid in g.incident[u]:
            c = colours[eid]
            if c is None:
                continue
            if c in seen:
                return Verdict(False, "conflict", u, (g.edges[seen[c]], g.edges[eid]), c)
            seen[c] = eid
    if require_complete:
        for e, c in zip(g.edges, colours):
            if c is None:
                return Verdict(False, "uncoloured", None, (e,))
    return Verdict(True)


def alternating_path(colouring: PartialEdgeColouring, w: int, a: int, b: int) -> list[int]:
    """Vertices of the maximal path from ``w`` whose edges are coloured b, a, b, ...

    Requires ``w`` to miss ``a``; in a proper colouring the walk then never
    revisits a vertex.
    """
    path = [w]
    x, want = w, b
    for _ in range(colouring.graph.m + 1):
        y = colouring.neighbour_via(x, want)
        if y is None:
            return path
        path.append(y)
        x, want = y, (a if want == b else b)
    raise ColouringError("alternating walk did not terminate; colouring is improper")


def kempe_swap(colouring: PartialEdgeColouring, w: int, a: int, b: int) -> int:
    """Exchange ``a`` and ``b`` on the alternating path from ``w``, in place.

    Returns the far end ``w*`` of the path (``w`` itself when ``w`` misses
    ``b`` as well). Only the missing sets of ``w`` and ``w*`` change.
    """
    if a == b:
        raise ValueError("kempe_swap needs two distinct colours")
    for c in (a, b):
        colouring._check_palette(c)
    if not colouring.missing_mask(w) >> a & 1:
        raise ValueError(f"vertex {w} does not miss colour {a}")
    path = alternating_path(colouring, w, a, b)
    g = colouring.graph
    eids = [g.edge_id(x, y) for x, y in zip(path, path[1:])]
    olds = [colouring.colours[eid] for eid in eids]
    for eid in eids:
        colouring._set(eid, None)
    for eid, old in zip(eids, olds):
        colouring._set(eid, a if old == b else b)
    return path[-1]
