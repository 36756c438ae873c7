from __future__ import annotations

import itertools

import hypothesis.strategies as st
import pytest

from edgecolour import PartialEdgeColouring, build_graph
from edgecolour.instances import SplitMix64, gen_random


@pytest.fixture
def star_tail():
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])


def all_labelled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def random_graph_stream(count, max_n=40, seed_base=0):
    """Seeded random graphs with 2..max_n vertices and edge density 0.05..0.35."""
    for s in range(seed_base, seed_base + count):
        rng = SplitMix64(s)
        n = 2 + rng.below(max_n - 1)
        prob = 0.05 + 0.3 * rng.uniform()
        yield s, gen_random(n, prob, s)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, flag in zip(pairs, keep) if flag])


@st.composite
def partial_colourings(draw, max_n=8, max_k=5):
    """A graph with a proper partial colouring built by random greedy attempts."""
    graph = draw(graphs(max_n))
    k = draw(st.integers(min_value=2, max_value=max_k))
    c = PartialEdgeColouring(graph, k)
    for u, v in graph.edges:
        colour = draw(st.integers(min_value=0, max_value=k))
        if colour and not (c.used_mask(u) | c.used_mask(v)) >> colour & 1:
            c.assign(u, v, colour)
    return c


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
