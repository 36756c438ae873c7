import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecolour import ColouringError, PartialEdgeColouring, decompose, max_degree
from edgecolour.graph import semi_core_edge_bound
from edgecolour.instances import (
    FormatError,
    SplitMix64,
    gen_complete,
    gen_cycle,
    gen_few_max_degree,
    gen_petersen,
    gen_random,
    gen_star,
    read_colouring,
    read_graph,
    write_colouring,
    write_graph,
)
from edgecolour.solver import solve

from conftest import graphs


def test_splitmix_reference_values():
    # Published SplitMix64 outputs for seed 0.
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_standard_families():
    k4 = gen_complete(4)
    assert (k4.n, k4.m, set(k4.degrees())) == (4, 6, {3})
    c5 = gen_cycle(5)
    assert (c5.n, c5.m, set(c5.degrees())) == (5, 5, {2})
    pet = gen_petersen()
    assert (pet.n, pet.m, set(pet.degrees())) == (10, 15, {3})
    assert decompose(pet).p == 10
    assert gen_star(3).degrees() == [3, 1, 1, 1]


@pytest.mark.parametrize("call", [
    lambda: gen_complete(0), lambda: gen_cycle(2), lambda: gen_star(0),
    lambda: gen_few_max_degree(0, 3, 10, 1), lambda: gen_few_max_degree(2, 3, 5, 1),
    lambda: gen_few_max_degree(3, 1, 10, 1),
])
def test_generator_rejections(call):
    with pytest.raises(ValueError):
        call()


def test_random_is_seeded():
    assert gen_random(12, 0.3, 7) == gen_random(12, 0.3, 7)
    assert gen_random(12, 0.3, 7) != gen_random(12, 0.3, 8)


def test_few_max_degree_single_core():
    g = gen_few_max_degree(1, 3, 6, seed=3)
    assert g.n == 6
    assert sorted(g.degrees()).count(3) == 1
    assert max_degree(g) == 3


def test_few_max_degree_two_cores():
    g = gen_few_max_degree(2, 3, 20, seed=11)
    degrees = g.degrees()
    assert degrees.count(3) == 2 and max(degrees) == 3
    assert decompose(g).q <= 2 + 2 * 3


@settings(max_examples=100, deadline=None)
@given(p=st.integers(1, 4), k=st.integers(2, 5), extra=st.integers(0, 60),
       seed=st.integers(0, 2**32))
def test_few_max_degree_profile(p, k, extra, seed):
    n = p + k * p + extra
    g = gen_few_max_degree(p, k, n, seed)
    assert g.n == n
    assert [d for d in g.degrees() if d == k] == [k] * p
    assert max_degree(g) == k
    dec = decompose(g)
    assert dec.core_vertices == tuple(range(p))
    assert dec.semi_core.m <= semi_core_edge_bound(k, p)
    assert dec.q <= p + k * p
    assert read_graph(write_graph(g)) == g


def test_few_max_degree_semicore_independent_of_n():
    small = decompose(gen_few_max_degree(2, 3, 100, seed=4))
    large = decompose(gen_few_max_degree(2, 3, 5000, seed=4))
    assert small.semi_core == large.semi_core
    assert small.semi_core_labels == large.semi_core_labels


def test_matching_core_for_k1():
    g = gen_few_max_degree(4, 1, 7, seed=2)
    assert g.m == 2 and g.degrees().count(1) == 4


def test_read_single_edge():
    g = read_graph("p 2 1\ne 0 1\n")
    assert g.edges == ((0, 1),)


def test_write_triangle():
    assert write_graph(gen_cycle(3)) == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n"


def test_read_with_comments_and_no_trailing_newline():
    g = read_graph("c a triangle\np 3 3\ne 1 0\n\ne 2 1\ne 0 2")
    assert g == gen_cycle(3)


@pytest.mark.parametrize("text, lineno", [
    ("p 3 2\ne 0 1\ne 1 2\ne 0 2\n", 4),
    ("p 3\n", 1),
    ("e 0 1\n", 1),
    ("p 3 1\ne 0 5\n", 2),
    ("p 3 1\ne 0 x\n", 2),
    ("p 3 1\ne 1 1\n", 2),
    ("p 3 1\nq\n", 2),
    ("p 3 2\ne 0 1\n", 2),
    ("p 3 1\np 3 1\n", 2),
])
def test_read_errors(text, lineno):
    with pytest.raises(FormatError) as info:
        read_graph(text)
    assert info.value.lineno == lineno


def test_read_duplicate_edge():
    with pytest.raises(FormatError, match="duplicate"):
        read_graph("p 3 2\ne 0 1\ne 1 0\n")


def test_missing_header():
    with pytest.raises(FormatError, match="header"):
        read_graph("c nothing\n")


@given(graphs(max_n=10))
def test_graph_round_trip(g):
    text = write_graph(g)
    assert read_graph(text) == g
    assert write_graph(read_graph(text)) == text


def test_colouring_round_trip():
    g = gen_petersen()
    c = solve(g, 4).witness
    text = write_colouring(c)
    assert len(text.splitlines()) == 15
    again = read_colouring(text, g, 4)
    assert again == c
    assert write_colouring(again) == text


def test_partial_colouring_round_trip():
    g = gen_cycle(4)
    c = PartialEdgeColouring.from_colours(g, 3, [1, None, 3, None])
    assert read_colouring(write_colouring(c), g, 3) == c


def test_read_colouring_errors():
    g = gen_cycle(3)
    with pytest.raises(FormatError) as info:
        read_colouring("0 1 1\n0 2\n", g)
    assert info.value.lineno == 2
    with pytest.raises(FormatError, match="not an edge"):
        read_colouring("0 5 1\n", g)
    with pytest.raises(FormatError, match="twice"):
        read_colouring("0 1 1\n1 0 2\n", g)
    with pytest.raises(FormatError, match="positive"):
        read_colouring("0 1 0\n", g)
    with pytest.raises(ColouringError):
        read_colouring("0 1 4\n", g, 3)
    assert read_colouring("0 1 4\n", g).k == 4
