import math

import pytest

from app.bounds.schema import BoundReport, GraphClass
from app.bounds.service import (
    check_bounds,
    expected_maximizers,
    f_tree_closed,
    f_turan_closed,
    f_turan_connected,
    f_turan_recursive,
    lower_bound,
    trivial_bounds,
    upper_bound,
)
from app.counting.service import fibonacci_index, fibonacci_number
from app.criticality.service import is_alpha_critical_graph, stability_number
from app.graph.service import delete_closed_neighborhood
from app.graph.canonical import canonical_form
from core.base.exceptions import InvalidArgumentError
from tests.conftest import family

GRID = [(n, alpha) for n in range(1, 61) for alpha in range(1, n + 1)]


def test_turan_values():
    assert f_turan_closed(7, 3) == 36
    assert f_turan_recursive(7, 3) == 36
    assert f_turan_closed(6, 3) + f_turan_closed(4, 2) == 36
    assert f_turan_recursive(5, 5) == 32
    assert f_turan_recursive(4, 1) == 5
    assert all(f_turan_closed(n, 1) == n + 1 for n in range(1, 30))
    assert all(f_turan_closed(n, n) == 2**n for n in range(1, 30))


def test_turan_connected_values():
    assert f_turan_connected(7, 3) == 31
    assert f_turan_connected(5, 2) == 11
    assert all(f_turan_connected(n, 1) == n + 1 for n in range(2, 30))
    assert all(f_turan_connected(n, n - 1) == 2 ** (n - 1) + 1 for n in range(2, 30))


def test_tree_values():
    assert f_tree_closed(7, 4) == 40
    assert f_tree_closed(6, 3) == 22
    assert all(f_tree_closed(n, n - 1) == 2 ** (n - 1) + 1 for n in range(2, 30))


def test_lower_bound_values():
    assert lower_bound(7, 3) == 12
    assert lower_bound(9, 1) == 10
    assert lower_bound(9, 9) == 2**9


@pytest.mark.parametrize(
    ("func", "n", "alpha"),
    [
        (f_turan_closed, 5, 0),
        (f_turan_closed, 5, 6),
        (f_turan_recursive, 3, 4),
        (f_turan_connected, 5, 5),
        (f_turan_connected, 5, 0),
        (f_tree_closed, 6, 2),
        (f_tree_closed, 6, 6),
        (lower_bound, 4, 5),
    ],
)
def test_out_of_range_alpha(func, n, alpha):
    with pytest.raises(InvalidArgumentError):
        func(n, alpha)


def test_closed_and_recursive_agree_on_grid():
    assert all(f_turan_closed(n, a) == f_turan_recursive(n, a) for n, a in GRID)


def test_turan_bound_is_strictly_increasing():
    for n, alpha in GRID:
        if alpha < n:
            assert f_turan_closed(n - 1, alpha) < f_turan_closed(n, alpha)
            assert f_turan_closed(n, alpha) < f_turan_closed(n, alpha + 1)


def test_bounds_match_counts_of_extremal_graphs():
    for n in range(1, 15):
        for alpha in range(1, n + 1):
            assert f_turan_closed(n, alpha) == fibonacci_index(family("turan", n, alpha))
            assert lower_bound(n, alpha) == fibonacci_index(
                family("complete-split", n, alpha)
            )
            if alpha < n:
                assert f_turan_connected(n, alpha) == fibonacci_index(
                    family("turan-connected", n, alpha)
                )


def test_tree_bound_equals_connected_bound():
    for n in range(2, 31):
        for alpha in range((n + 1) // 2, n):
            assert f_tree_closed(n, alpha) == f_turan_connected(n, alpha)


def test_sandwich():
    for n, alpha in GRID:
        if alpha < n:
            assert lower_bound(n, alpha) <= f_turan_connected(n, alpha) <= f_turan_closed(n, alpha)


def test_upper_bound_with_alpha_n_falls_back_to_turan():
    assert upper_bound(1, 1, GraphClass.CONNECTED) == 2
    assert upper_bound(1, 1, GraphClass.TREE) == 2
    assert upper_bound(6, 3, GraphClass.TREE) == 22


def test_trivial_bounds():
    assert trivial_bounds(5, GraphClass.GENERAL) == (6, 32)
    assert trivial_bounds(5, GraphClass.CONNECTED) == (6, 17)
    assert trivial_bounds(5, GraphClass.TREE) == (fibonacci_number(7), 17)
    with pytest.raises(InvalidArgumentError):
        trivial_bounds(0, GraphClass.GENERAL)


def test_check_bounds_turan(t73):
    report = check_bounds(t73, GraphClass.GENERAL)
    assert report.fib == report.upper == 36
    assert report.lower == 12
    assert report.upper_tight and not report.lower_tight
    assert report.within_bounds


def test_check_bounds_cycle_is_tight_for_connected(c5):
    report = check_bounds(c5, GraphClass.CONNECTED)
    assert report.fib == report.upper == 11
    assert report.upper_tight


def test_check_bounds_path_as_tree(p4):
    report = check_bounds(p4, GraphClass.TREE)
    assert (report.fib, report.alpha, report.lower, report.upper) == (8, 2, 6, 8)
    assert report.upper_tight and not report.lower_tight


def test_check_bounds_complete_split_is_lower_tight():
    report = check_bounds(family("complete-split", 7, 3), GraphClass.CONNECTED)
    assert report.fib == report.lower == 12
    assert report.lower_tight and not report.upper_tight


def test_check_bounds_verifies_class(t73, c5):
    with pytest.raises(InvalidArgumentError):
        check_bounds(t73, GraphClass.CONNECTED)
    with pytest.raises(InvalidArgumentError):
        check_bounds(c5, GraphClass.TREE)


def test_exceptional_maximizers():
    forms = {canonical_form(g) for g in expected_maximizers(5, 2, GraphClass.CONNECTED)}
    assert forms == {
        canonical_form(family("turan-connected", 5, 2)),
        canonical_form(family("cycle", 5)),
    }
    assert len(expected_maximizers(5, 2, GraphClass.GENERAL)) == 1


def test_bound_report_json_uses_strings_for_counts(t73):
    report = check_bounds(t73, GraphClass.GENERAL)
    restored = BoundReport.model_validate_json(report.model_dump_json())
    assert restored == report
    assert '"fib":"36"' in report.model_dump_json()


@pytest.mark.parametrize(
    "g",
    [family("turan", 7, 3), family("turan", 9, 4), family("cycle", 5), family("complete", 4)],
)
def test_max_degree_vertex_leaves_small_remainder_in_critical_graph(g):
    assert is_alpha_critical_graph(g)
    alpha = stability_number(g)
    v = max(range(g.n), key=g.degree)
    rest = delete_closed_neighborhood(g, v)
    assert rest.n == g.n - g.max_degree - 1
    assert rest.n <= g.n - math.ceil(g.n / alpha)


def test_tightness_above_canonical_limit_compares_structure():
    tc = family("turan-connected", 12, 4).relabel(list(reversed(range(12))))
    report = check_bounds(tc, GraphClass.CONNECTED)
    assert report.fib == report.upper and report.upper_tight
    split = family("complete-split", 12, 3).relabel([(v * 5) % 12 for v in range(12)])
    report = check_bounds(split, GraphClass.GENERAL)
    assert report.fib == report.lower and report.lower_tight


def test_tightness_requires_isomorphic_extremal_graph(monkeypatch):
    monkeypatch.setattr(
        "app.bounds.service.expected_maximizers",
        lambda n, alpha, graph_class: [family("turan", n, alpha)],
    )
    report = check_bounds(family("turan-connected", 12, 4), GraphClass.CONNECTED)
    assert report.fib == report.upper
    assert not report.upper_tight
