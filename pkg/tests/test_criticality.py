import pytest

from app.bounds.schema import GraphClass
from app.criticality.schema import DecompositionRead
from app.criticality.service import (
    check_critical_connectivity,
    check_critical_vertex_identities,
    find_alpha_critical_decomposition,
    is_alpha_critical_edge,
    is_alpha_critical_graph,
    stability_number,
)
from app.generators.service import turan_blocks
from app.graph.canonical import canonical_form
from app.graph.model import CanonicalForm, Graph
from app.graph.service import delete_edge, is_bridge, is_connected
from app.search.enumeration import enumerate_graphs
from app.search.service import build_extremal_report
from core.base.exceptions import InvalidArgumentError
from tests.conftest import family


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (family("complete", 6), 1),
        (Graph.empty(6), 6),
        (family("turan", 7, 3), 3),
        (family("cycle", 5), 2),
        (family("path", 7), 4),
        (Graph.empty(0), 0),
    ],
)
def test_stability_number(g, expected):
    assert stability_number(g) == expected


def test_stability_number_matches_brute_force():
    for g in enumerate_graphs(6):
        best = max(
            mask.bit_count()
            for mask in range(1 << g.n)
            if all(not g.adj[v] & mask for v in range(g.n) if mask >> v & 1)
        )
        assert stability_number(g) == best


def test_critical_edges(c5, tc73):
    assert all(is_alpha_critical_edge(c5, u, v) for u, v in c5.edges())
    k4 = family("complete", 4)
    assert all(is_alpha_critical_edge(k4, u, v) for u, v in k4.edges())
    assert not is_alpha_critical_edge(tc73, 0, 3)
    with pytest.raises(InvalidArgumentError):
        is_alpha_critical_edge(c5, 0, 2)


@pytest.mark.parametrize("n", range(2, 11))
def test_every_edge_of_complete_and_turan_graphs_is_critical(n):
    assert is_alpha_critical_graph(family("complete", n))
    for alpha in range(1, n + 1):
        assert is_alpha_critical_graph(family("turan", n, alpha))


@pytest.mark.parametrize("n", range(4, 11))
def test_bridges_of_turan_connected_are_safe(n):
    for alpha in range(2, n - 1):
        g = family("turan-connected", n, alpha)
        assert stability_number(g) == alpha
        for block in turan_blocks(n, alpha)[1:]:
            assert is_bridge(g, 0, block.start)
            assert not is_alpha_critical_edge(g, 0, block.start)


def test_critical_graph_examples(tc73):
    assert is_alpha_critical_graph(Graph.empty(5))
    assert is_alpha_critical_graph(family("turan", 8, 3))
    assert not is_alpha_critical_graph(tc73)


def test_decomposition_of_turan_connected(tc73):
    d = find_alpha_critical_decomposition(tc73)
    assert d is not None
    assert d.bridge == (0, 3)
    assert d.g1 == family("complete", 2)
    assert canonical_form(d.g2) == canonical_form(family("turan-connected", 5, 2))
    assert (d.v1, d.v2) == (0, 0)
    assert d.g1_alpha_critical
    assert stability_number(d.g1) + stability_number(d.g2) == stability_number(tc73)


def test_decomposition_absent_without_safe_bridges(c5):
    assert find_alpha_critical_decomposition(c5) is None
    assert find_alpha_critical_decomposition(family("complete", 5)) is None
    assert find_alpha_critical_decomposition(family("complete", 2)) is None


def test_decomposition_requires_connected_graph():
    with pytest.raises(InvalidArgumentError):
        find_alpha_critical_decomposition(family("turan", 4, 2))


def test_decomposition_read_schema(tc73):
    read = DecompositionRead.from_decomposition(find_alpha_critical_decomposition(tc73))
    assert read.g1.edges == [(0, 1)]
    assert DecompositionRead.model_validate_json(read.model_dump_json()) == read


@pytest.mark.parametrize(
    "g", [family("cycle", 7), family("complete", 4), family("turan", 6, 2)]
)
def test_vertex_identities(g):
    assert all(check_critical_vertex_identities(g, v) for v in range(g.n))


def test_vertex_identities_preconditions(tc73):
    with pytest.raises(InvalidArgumentError):
        check_critical_vertex_identities(tc73, 0)
    with pytest.raises(InvalidArgumentError):
        check_critical_vertex_identities(family("turan", 5, 3), 4)


@pytest.mark.parametrize("g", [family("cycle", 5), family("complete", 6), family("cycle", 9)])
def test_critical_connectivity(g):
    assert check_critical_connectivity(g)


def test_critical_connectivity_preconditions(tc73):
    with pytest.raises(InvalidArgumentError):
        check_critical_connectivity(tc73)
    with pytest.raises(InvalidArgumentError):
        check_critical_connectivity(family("turan", 4, 2))


def test_identities_hold_on_every_critical_graph_up_to_six_vertices():
    critical = [g for n in range(1, 7) for g in enumerate_graphs(n) if is_alpha_critical_graph(g)]
    assert critical
    for g in critical:
        for v in range(g.n):
            if g.degree(v) > 0:
                assert check_critical_vertex_identities(g, v)
        if is_connected(g) and g.m > 0:
            assert check_critical_connectivity(g)


@pytest.mark.parametrize("n", range(2, 7))
def test_removing_an_edge_raises_alpha_by_at_most_one(n):
    for g in enumerate_graphs(n):
        alpha = stability_number(g)
        for u, v in g.edges():
            assert stability_number(delete_edge(g, u, v)) in (alpha, alpha + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_extremal_connected_edges_are_critical_or_safe_bridges(n):
    for record in build_extremal_report(n, GraphClass.CONNECTED).records:
        for form in record.maximizers:
            g = CanonicalForm.parse(form).to_graph()
            for u, v in g.edges():
                assert is_alpha_critical_edge(g, u, v) or is_bridge(g, u, v)
