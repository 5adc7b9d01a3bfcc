"""
Границы индекса Фибоначчи в классах G(n, alpha) и C(n, alpha).

    f_T(n, a)  = (ceil(n/a) + 1)^p * (floor(n/a) + 1)^(a - p),  p = n mod a
    f_TC(n, a) = f_T(n-1, a) + f_T(n', a'),  n' = n - ceil(n/a) - a + 1,
                 a' = min(n', a - 1)                      при 2 <= a <= n-2
    нижняя     = 2^a + n - a

Всё в неограниченных целых, без плавающей точки.
"""

from functools import lru_cache

import networkx as nx

from app.bounds.schema import BoundQuery, BoundReport, BoundValue, GraphClass
from app.counting.service import fibonacci_index, fibonacci_number
from app.criticality.service import stability_number
from app.generators.schema import FamilySpec, GraphFamily
from app.generators.service import generate
from app.graph.canonical import canonical_form
from app.graph.model import Graph
from app.graph.service import is_connected, is_tree
from core.base.config import settings
from core.base.exceptions import InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "f_turan_closed",
    "f_turan_recursive",
    "f_turan_connected",
    "f_tree_closed",
    "lower_bound",
    "upper_bound",
    "trivial_bounds",
    "expected_minimizers",
    "expected_maximizers",
    "check_bounds",
    "MAXIMIZER_OVERRIDES",
    "BoundsService",
    "get_bounds_service",
)

MAXIMIZER_OVERRIDES: dict[tuple[GraphClass, int, int], tuple[FamilySpec, ...]] = {
    (GraphClass.CONNECTED, 5, 2): (FamilySpec(family=GraphFamily.CYCLE, n=5),),
}
"""Дополнительные экстремальные графы сверх TC(n, alpha)."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_alpha(n: int, alpha: int, upper: int, what: str) -> None:
    if not 1 <= alpha <= upper:
        raise InvalidArgumentError(
            f"{what} requires 1 <= alpha <= {upper}, got n={n}, alpha={alpha}"
        )


def f_turan_closed(n: int, alpha: int) -> int:
    """
    F(T(n, alpha)) по формуле произведения.

    Raises:
        InvalidArgumentError: alpha вне 1..n.
    """
    _check_alpha(n, alpha, n, "f_T")
    q, p = divmod(n, alpha)
    return (q + 2) ** p * (q + 1) ** (alpha - p)


@lru_cache(maxsize=None)
def _f_turan_recursive(n: int, alpha: int) -> int:
    if alpha == 1:
        return n + 1
    if alpha == n:
        return 1 << n
    return _f_turan_recursive(n - 1, alpha) + _f_turan_recursive(
        n - _ceil_div(n, alpha), alpha - 1
    )


def f_turan_recursive(n: int, alpha: int) -> int:
    """
    F(T(n, alpha)) по рекуррентности удаления вершины максимальной степени.

    Raises:
        InvalidArgumentError: alpha вне 1..n.
    """
    _check_alpha(n, alpha, n, "f_T")
    return _f_turan_recursive(n, alpha)


def f_turan_connected(n: int, alpha: int) -> int:
    """
    F(TC(n, alpha)).

    Raises:
        InvalidArgumentError: alpha вне 1..n-1 (TC(n, n) не определён).
    """
    _check_alpha(n, alpha, n - 1, "f_TC")
    if alpha == 1:
        return n + 1
    if alpha == n - 1:
        return (1 << (n - 1)) + 1
    n_prime = n - _ceil_div(n, alpha) - alpha + 1
    alpha_prime = min(n_prime, alpha - 1)
    return f_turan_closed(n - 1, alpha) + f_turan_closed(n_prime, alpha_prime)


def f_tree_closed(n: int, alpha: int) -> int:
    """
    Наибольший F среди деревьев порядка n с числом устойчивости alpha.

    3^x * 2^y + 2^x, где x = n - alpha - 1 путей длины 2 и
    y = 2*alpha - n + 1 путей длины 1 у центра.

    Raises:
        InvalidArgumentError: alpha вне n/2..n-1.
    """
    if not (2 * alpha >= n and 1 <= alpha <= n - 1):
        raise InvalidArgumentError(
            f"tree bound requires n/2 <= alpha <= n-1, got n={n}, alpha={alpha}"
        )
    x = n - alpha - 1
    y = 2 * alpha - n + 1
    return 3**x * 2**y + 2**x


def lower_bound(n: int, alpha: int) -> int:
    """2^alpha + n - alpha."""
    _check_alpha(n, alpha, n, "lower bound")
    return (1 << alpha) + n - alpha


def upper_bound(n: int, alpha: int, graph_class: GraphClass) -> int:
    """
    Верхняя граница F в классе.

    Для connected и tree при alpha = n (только K_1) берётся f_T(n, n).
    """
    if graph_class is GraphClass.GENERAL or alpha == n:
        return f_turan_closed(n, alpha)
    if graph_class is GraphClass.TREE:
        return f_tree_closed(n, alpha)
    return f_turan_connected(n, alpha)


def trivial_bounds(n: int, graph_class: GraphClass) -> tuple[int, int]:
    """
    Границы Продингера-Тихи, не зависящие от alpha.

    general: n+1 .. 2^n; connected: n+1 .. 2^(n-1)+1; tree: f_(n+2) .. 2^(n-1)+1.
    """
    if n < 1:
        raise InvalidArgumentError(f"bounds require n >= 1, got {n}")
    match graph_class:
        case GraphClass.GENERAL:
            return n + 1, 1 << n
        case GraphClass.CONNECTED:
            return n + 1, (1 << (n - 1)) + 1
        case GraphClass.TREE:
            return fibonacci_number(n + 2), (1 << (n - 1)) + 1


def expected_minimizers(n: int, alpha: int) -> list[Graph]:
    """Единственный минимизатор F в обоих классах - CS(n, alpha)."""
    return [generate(FamilySpec(family=GraphFamily.COMPLETE_SPLIT, n=n, alpha=alpha))]


def expected_maximizers(n: int, alpha: int, graph_class: GraphClass) -> list[Graph]:
    """Экстремальные графы верхней границы с учётом таблицы исключений."""
    if graph_class is GraphClass.GENERAL or alpha == n:
        family = GraphFamily.TURAN
    else:
        family = GraphFamily.TURAN_CONNECTED
    graphs = [generate(FamilySpec(family=family, n=n, alpha=alpha))]
    for extra in MAXIMIZER_OVERRIDES.get((graph_class, n, alpha), ()):
        graphs.append(generate(extra))
    return graphs


def _matches_any(g: Graph, candidates: list[Graph]) -> bool:
    if g.n > settings.CANONICAL_FORM_LIMIT:
        graph = g.to_networkx()
        return any(nx.is_isomorphic(graph, c.to_networkx()) for c in candidates)
    form = canonical_form(g)
    return any(canonical_form(c) == form for c in candidates)


def _check_class(g: Graph, graph_class: GraphClass) -> None:
    if g.n < 1:
        raise InvalidArgumentError("bounds are defined for graphs with n >= 1")
    if graph_class is GraphClass.CONNECTED and not is_connected(g):
        raise InvalidArgumentError("graph declared connected is not connected")
    if graph_class is GraphClass.TREE and not is_tree(g):
        raise InvalidArgumentError("graph declared a tree is not a tree")


def check_bounds(g: Graph, graph_class: GraphClass) -> BoundReport:
    """
    Сравнить F(G) с границами для заявленного класса.

    Args:
        g: Граф порядка не меньше 1.
        graph_class: general, connected или tree; принадлежность проверяется.

    Returns:
        BoundReport: Значения границ и признаки их достижения.

    Raises:
        InvalidArgumentError: Граф не принадлежит заявленному классу.
    """
    _check_class(g, graph_class)
    n = g.n
    alpha = stability_number(g)
    fib = fibonacci_index(g)
    lower = lower_bound(n, alpha)
    upper = upper_bound(n, alpha, graph_class)
    trivial_lower, trivial_upper = trivial_bounds(n, graph_class)

    lower_tight = fib == lower and _matches_any(g, expected_minimizers(n, alpha))
    upper_tight = fib == upper and _matches_any(
        g, expected_maximizers(n, alpha, graph_class)
    )
    within = lower <= fib <= upper
    if not within:
        logger.warning(
            "F=%d вне границ [%d, %d] для n=%d, alpha=%d (%s)",
            fib, lower, upper, n, alpha, graph_class.value,
        )

    return BoundReport(
        n=n,
        m=g.m,
        alpha=alpha,
        fib=fib,
        lower=lower,
        upper=upper,
        lower_tight=lower_tight,
        upper_tight=upper_tight,
        within_bounds=within,
        trivial_lower=trivial_lower,
        trivial_upper=trivial_upper,
        graph_class=graph_class,
    )


class BoundsService:
    """Сервисный слой для значений границ по запросу (n, alpha)."""

    def turan(self, query: BoundQuery) -> BoundValue:
        """Верхняя граница f_T(n, alpha) в классе всех графов."""
        return self._value(GraphClass.GENERAL.value, query, f_turan_closed)

    def turan_connected(self, query: BoundQuery) -> BoundValue:
        """Верхняя граница f_TC(n, alpha) в классе связных графов."""
        return self._value(GraphClass.CONNECTED.value, query, f_turan_connected)

    def tree(self, query: BoundQuery) -> BoundValue:
        """Верхняя граница для деревьев (n/2 <= alpha <= n-1)."""
        return self._value(GraphClass.TREE.value, query, f_tree_closed)

    def lower(self, query: BoundQuery) -> BoundValue:
        """Нижняя граница 2^alpha + n - alpha, общая для всех классов."""
        return self._value("lower", query, lower_bound)

    @staticmethod
    def _value(bound: str, query: BoundQuery, func) -> BoundValue:
        value = func(query.n, query.alpha)
        logger.debug("%s(n=%d, alpha=%d) = %d", bound, query.n, query.alpha, value)
        return BoundValue(bound=bound, n=query.n, alpha=query.alpha, value=value)


def get_bounds_service() -> BoundsService:
    """
    Фабрика для создания экземпляра BoundsService.

    Используется как dependency в FastAPI для внедрения сервиса.
    """
    return BoundsService()
