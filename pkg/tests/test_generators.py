import math

import pytest

from app.criticality.service import stability_number
from app.generators.schema import FamilySpec, GraphFamily
from app.generators.service import (
    disjoint_copies,
    family_identities_check,
    generate,
    parse_family_spec,
    random_graph,
    turan_blocks,
)
from app.graph.canonical import canonical_form
from app.graph.model import Graph
from app.graph.service import connected_components, is_connected
from core.base.exceptions import InvalidArgumentError
from tests.conftest import family


def test_turan_blocks_put_larger_cliques_first():
    assert turan_blocks(7, 3) == [range(0, 3), range(3, 5), range(5, 7)]


def test_turan_7_3(t73):
    assert [c.n for c in connected_components(t73)] == [3, 2, 2]
    assert t73.m == 5


def test_turan_connected_7_3(tc73):
    assert tc73.m == 7
    assert tc73.max_degree == 4
    assert tc73.degree(0) == 4
    assert is_connected(tc73)


def test_turan_with_alpha_n_is_edgeless():
    assert family("turan", 5, 5) == Graph.empty(5)


def test_turan_connected_with_alpha_n_minus_one_is_star():
    assert canonical_form(family("turan-connected", 6, 5)) == canonical_form(family("star", 6))


def test_complete_split_labels():
    g = family("complete-split", 5, 2)
    assert g.adj[0] & 0b11 == 0
    assert g.m == 3 + 2 * 3


def test_turan_connected_rejects_alpha_n():
    with pytest.raises(InvalidArgumentError, match="n-1"):
        family("turan-connected", 4, 4)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec(family=GraphFamily.TURAN, n=5),
        FamilySpec(family=GraphFamily.TURAN, n=5, alpha=0),
        FamilySpec(family=GraphFamily.COMPLETE_SPLIT, n=3, alpha=4),
        FamilySpec(family=GraphFamily.CYCLE, n=2),
        FamilySpec(family=GraphFamily.PATH, n=0),
        FamilySpec(family=GraphFamily.EMPTY_COMPLEMENT, n=65),
    ],
)
def test_generate_rejects_invalid_specs(spec):
    with pytest.raises(InvalidArgumentError):
        generate(spec)


def test_generation_is_deterministic():
    spec = FamilySpec(family=GraphFamily.TURAN_CONNECTED, n=9, alpha=4)
    assert generate(spec).adj == generate(spec).adj


@pytest.mark.parametrize("n", [3, 7, 10])
def test_family_identities(n):
    assert family_identities_check(n)


def test_family_identities_requires_three_vertices():
    with pytest.raises(InvalidArgumentError):
        family_identities_check(2)


def test_parse_family_spec():
    assert parse_family_spec("turan:n=7,alpha=3") == FamilySpec(
        family=GraphFamily.TURAN, n=7, alpha=3
    )
    assert parse_family_spec("empty:n=4").family is GraphFamily.EMPTY_COMPLEMENT
    assert str(parse_family_spec("path:n=5")) == "path:n=5"


@pytest.mark.parametrize(
    "text",
    [
        "turan",
        "wheel:n=5",
        "path:n=x",
        "path:n=\u00b2",
        "path:n=\u0663",
        "path:k=3",
        "path:n=3,n=4",
        "turan:alpha=2",
    ],
)
def test_parse_family_spec_errors(text):
    with pytest.raises(InvalidArgumentError):
        parse_family_spec(text)


def test_random_graph_is_seeded():
    assert random_graph(12, 0.5, 3) == random_graph(12, 0.5, 3)
    assert random_graph(12, 0.0, 3) == Graph.empty(12)
    assert random_graph(6, 1.0, 3) == family("complete", 6)
    with pytest.raises(InvalidArgumentError):
        random_graph(4, 1.5, 0)


def test_disjoint_copies():
    g = disjoint_copies(family("path", 3), 3)
    assert g.n == 9 and g.m == 6
    assert disjoint_copies(g, 0) == Graph.empty(0)


def test_generate_checks_order_before_building_edges():
    with pytest.raises(InvalidArgumentError, match="64-vertex limit"):
        generate(FamilySpec(family=GraphFamily.COMPLETE, n=100_000))
    assert generate(FamilySpec(family=GraphFamily.COMPLETE, n=64)).m == 64 * 63 // 2


@pytest.mark.parametrize("n", range(1, 13))
def test_turan_graphs_have_requested_alpha_and_size(n):
    for alpha in range(1, n + 1):
        g = family("turan", n, alpha)
        size = sum(math.comb(len(block), 2) for block in turan_blocks(n, alpha))
        assert stability_number(g) == alpha
        assert g.m == size
        if alpha <= n - 1:
            tc = family("turan-connected", n, alpha)
            assert stability_number(tc) == alpha
            assert tc.m == size + alpha - 1
