import random

import pytest

from app.graph.canonical import canonical_form, canonical_labeling, refine_colors
from app.graph.model import Graph
from app.graph.service import disjoint_union
from app.search.enumeration import enumerate_labeled_graphs
from core.base.config import settings
from core.base.exceptions import CapabilityError
from tests.conftest import family


def test_relabelings_of_path_share_form():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_different_sizes_give_different_forms():
    assert canonical_form(family("complete", 3)) != canonical_form(family("path", 3))


def test_turan_6_3_is_three_edges():
    k2 = family("complete", 2)
    assert canonical_form(family("turan", 6, 3)) == canonical_form(disjoint_union(k2, k2, k2))


def test_form_is_minimal_string_and_labeling_reproduces_it():
    g = family("star", 4)
    form, order = canonical_labeling(g)
    assert form.bits == "000111"
    # позиция k получает исходную вершину order[k]
    perm = [0] * g.n
    for k, v in enumerate(order):
        perm[v] = k
    assert g.relabel(perm) == form.to_graph()


def test_to_graph_is_a_fixed_point():
    g = family("turan-connected", 7, 3)
    form = canonical_form(g)
    assert canonical_form(form.to_graph()) == form


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_random_relabelings_preserve_form(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    density = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    g = Graph.from_edges(n, edges)
    form = canonical_form(g)
    perm = list(range(n))
    for _ in range(100):
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == form


def test_regular_graphs_with_equal_refinement_are_separated():
    # C_6 и два треугольника: одинаковая раскраска, разные классы
    c6 = family("cycle", 6)
    triangles = disjoint_union(family("complete", 3), family("complete", 3))
    assert len(set(refine_colors(c6))) == len(set(refine_colors(triangles))) == 1
    assert canonical_form(c6) != canonical_form(triangles)


def test_labeled_graphs_of_order_four_fall_into_eleven_classes():
    forms = {canonical_form(g) for g in enumerate_labeled_graphs(4)}
    assert len(forms) == 11


def test_refinement_does_not_depend_on_labels():
    g = family("turan-connected", 7, 3)
    perm = [6, 2, 4, 0, 1, 5, 3]
    assert sorted(refine_colors(g)) == sorted(refine_colors(g.relabel(perm)))


def test_limit_is_enforced():
    n = settings.CANONICAL_FORM_LIMIT + 1
    with pytest.raises(CapabilityError) as exc_info:
        canonical_form(Graph.empty(n))
    assert exc_info.value.limit == settings.CANONICAL_FORM_LIMIT
