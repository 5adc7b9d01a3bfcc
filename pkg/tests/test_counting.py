import random

import pytest

from app.counting.service import (
    FibonacciCounter,
    fibonacci_index,
    fibonacci_index_naive,
    fibonacci_number,
    fibonacci_of_path_closed,
)
from app.generators.service import random_graph
from app.graph.model import Graph
from app.graph.service import (
    delete_closed_neighborhood,
    delete_edge,
    delete_vertex,
    disjoint_union,
)
from app.search.enumeration import enumerate_graphs, enumerate_labeled_graphs
from core.base.config import settings
from core.base.exceptions import CapabilityError
from tests.conftest import family


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (family("complete", 5), 6),
        (Graph.empty(0), 1),
        (family("path", 4), 8),
        (family("star", 7), 65),
        (family("turan", 7, 3), 36),
        (family("cycle", 5), 11),
        (family("turan-connected", 7, 3), 31),
        (family("complete-split", 7, 3), 12),
    ],
)
def test_known_values(g, expected):
    assert fibonacci_index(g) == expected


@pytest.mark.parametrize("n", range(1, 21))
def test_closed_forms_of_classical_families(n):
    assert fibonacci_index(family("complete", n)) == n + 1
    assert fibonacci_index(family("empty-complement", n)) == 2**n
    assert fibonacci_index(family("star", n)) == 2 ** (n - 1) + 1
    assert fibonacci_index(family("path", n)) == fibonacci_number(n + 2)


def test_naive_values():
    assert fibonacci_index_naive(Graph.empty(3)) == 8
    assert fibonacci_index_naive(Graph.empty(1)) == 2
    assert fibonacci_index_naive(family("complete-split", 7, 3)) == 12


def test_fibonacci_numbers():
    assert [fibonacci_number(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert fibonacci_of_path_closed(1) == 2
    assert fibonacci_of_path_closed(4) == 8
    assert fibonacci_of_path_closed(10) == 144


def test_agrees_with_naive_on_all_labeled_graphs_of_order_five():
    graphs = list(enumerate_labeled_graphs(5))
    assert len(graphs) == 1024
    assert all(fibonacci_index(g) == fibonacci_index_naive(g) for g in graphs)


def test_agrees_with_naive_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(500):
        n = rng.randint(0, 18)
        g = random_graph(n, rng.random(), rng.randrange(1 << 32))
        assert fibonacci_index(g) == fibonacci_index_naive(g)


def test_naive_limit():
    with pytest.raises(CapabilityError):
        fibonacci_index_naive(Graph.empty(settings.NAIVE_COUNT_LIMIT + 1))


def test_components_multiply():
    g = family("turan", 9, 3)
    assert fibonacci_index(g) == 4**3


def test_stats_are_reset_between_runs():
    counter = FibonacciCounter(family("cycle", 12))
    first = counter.run()
    second = counter.run()
    assert first.fib == second.fib == fibonacci_number(11) + fibonacci_number(13)
    assert first.stats.branch_nodes == second.stats.branch_nodes > 0


def test_count_result_serializes_big_integers_as_strings():
    result = FibonacciCounter(Graph.empty(64)).run()
    assert result.fib == 2**64
    assert f'"fib":"{2**64}"' in result.model_dump_json()


@pytest.mark.slow
def test_forty_vertices_with_deletion_identity():
    g = random_graph(40, 0.3, 7)
    fib = fibonacci_index(g)
    assert 0 < fib <= 2**40
    rng = random.Random(7)
    for v in rng.sample(range(40), 5):
        assert fib == fibonacci_index(delete_vertex(g, v)) + fibonacci_index(
            delete_closed_neighborhood(g, v)
        )


@pytest.mark.parametrize("n", range(1, 6))
def test_deletion_identity_at_every_vertex(n):
    for g in enumerate_graphs(n):
        fib = fibonacci_index(g)
        for v in range(n):
            assert fib == fibonacci_index(delete_vertex(g, v)) + fibonacci_index(
                delete_closed_neighborhood(g, v)
            )


@pytest.mark.parametrize("n", range(2, 6))
def test_removing_an_edge_strictly_increases_count(n):
    for g in enumerate_graphs(n):
        fib = fibonacci_index(g)
        for u, v in g.edges():
            assert fib < fibonacci_index(delete_edge(g, u, v))


def test_disjoint_union_multiplies_on_random_pairs():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng.randint(0, 12), rng.random(), rng.randrange(1 << 32))
        h = random_graph(rng.randint(0, 12), rng.random(), rng.randrange(1 << 32))
        assert fibonacci_index(disjoint_union(g, h)) == fibonacci_index(g) * fibonacci_index(h)


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_range_is_attained_only_by_complete_and_edgeless(n):
    complete, edgeless = family("complete", n), Graph.empty(n)
    for g in enumerate_graphs(n):
        fib = fibonacci_index(g)
        assert n + 1 <= fib <= 2**n
        assert (fib == n + 1) == (g == complete)
        assert (fib == 2**n) == (g == edgeless)
