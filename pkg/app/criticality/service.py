"""
Число устойчивости и alpha-критичность рёбер и графов.

alpha(G) считается ветвлением по вершине максимальной степени:
alpha(G) = max(alpha(G-v), 1 + alpha(G-N[v])), с разбиением на
компоненты и редукцией вершин степени 1.
"""

from app.criticality.model import Decomposition
from app.graph.canonical import canonical_form
from app.graph.model import Graph, iter_bits
from app.graph.service import (
    bridges,
    component_masks,
    delete_closed_neighborhood,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    is_connected,
)
from core.base.config import settings
from core.base.exceptions import InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "StabilitySolver",
    "stability_number",
    "is_alpha_critical_edge",
    "is_alpha_critical_graph",
    "find_alpha_critical_decomposition",
    "check_critical_vertex_identities",
    "check_critical_connectivity",
)


class StabilitySolver:
    """Точное alpha для порождённых подграфов одного графа (ключ кэша - маска)."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._adj = g.adj
        self._memo: dict[int, int] = {}

    def solve(self, mask: int | None = None) -> int:
        if mask is None:
            mask = self.g.full_mask
        return sum(self._solve_connected(c) for c in component_masks(self._adj, mask))

    def _solve_connected(self, mask: int) -> int:
        size = mask.bit_count()
        if size <= 2:
            return 1
        cached = self._memo.get(mask)
        if cached is not None:
            return cached

        adj = self._adj
        pivot, pivot_degree = -1, -1
        leaf = -1
        for v in iter_bits(mask):
            degree = (adj[v] & mask).bit_count()
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree
            if degree == 1 and leaf < 0:
                leaf = v

        if pivot_degree == size - 1 and all(
            (adj[v] & mask).bit_count() == size - 1 for v in iter_bits(mask)
        ):
            result = 1
        elif leaf >= 0:
            # некоторое максимальное устойчивое множество содержит лист
            result = 1 + self.solve(mask & ~(adj[leaf] | 1 << leaf))
        else:
            result = max(
                self.solve(mask & ~(1 << pivot)),
                1 + self.solve(mask & ~(adj[pivot] | 1 << pivot)),
            )
        self._memo[mask] = result
        return result


def stability_number(g: Graph) -> int:
    """
    Размер наибольшего устойчивого множества.

    Args:
        g: Граф.

    Returns:
        int: alpha(G); для пустого графа 0.
    """
    return StabilitySolver(g).solve()


def is_alpha_critical_edge(g: Graph, u: int, v: int) -> bool:
    """
    Проверить, что alpha(G-e) > alpha(G) для ребра e = uv.

    Raises:
        InvalidArgumentError: uv не является ребром.
    """
    without = delete_edge(g, u, v)
    return stability_number(without) > stability_number(g)


def is_alpha_critical_graph(g: Graph) -> bool:
    """Все рёбра alpha-критические (граф без рёбер критичен по соглашению)."""
    alpha = stability_number(g)
    return all(
        stability_number(delete_edge(g, u, v)) > alpha for u, v in g.edges()
    )


def find_alpha_critical_decomposition(g: Graph) -> Decomposition | None:
    """
    Разложение по alpha-безопасному мосту с G1 минимального порядка.

    При равенстве порядков выбирается G1 с меньшей канонической формой,
    затем мост с меньшими концами. Критичность G1 проверяется и
    возвращается в поле g1_alpha_critical.

    Args:
        g: Связный граф.

    Returns:
        Decomposition | None: None, если alpha-безопасных мостов нет.

    Raises:
        InvalidArgumentError: Граф несвязен.
    """
    if not is_connected(g):
        raise InvalidArgumentError("decomposition requires a connected graph")

    alpha = stability_number(g)
    limit = settings.CANONICAL_FORM_LIMIT
    best_key = None
    best: tuple[int, int, int, int] | None = None

    for u, v in bridges(g):
        split = delete_edge(g, u, v)
        if stability_number(split) != alpha:
            continue
        side_u, side_v = component_masks(split.adj, split.full_mask)
        if not side_u >> u & 1:
            side_u, side_v = side_v, side_u

        sides = []
        for mask, end in ((side_u, u), (side_v, v)):
            sub = induced_subgraph(g, mask)
            form = str(canonical_form(sub)) if sub.n <= limit else ""
            sides.append(((sub.n, form), mask, end))
        sides.sort(key=lambda side: side[0])
        (order_key, g1_mask, g1_end), (_, g2_mask, g2_end) = sides

        key = (order_key, (u, v))
        if best_key is None or key < best_key:
            best_key = key
            best = (g1_mask, g1_end, g2_mask, g2_end)

    if best is None:
        logger.debug("alpha-безопасных мостов нет (n=%d, m=%d)", g.n, g.m)
        return None

    g1_mask, g1_end, g2_mask, g2_end = best
    g1 = induced_subgraph(g, g1_mask)
    g2 = induced_subgraph(g, g2_mask)
    decomposition = Decomposition(
        g1=g1,
        v1=(g1_mask & ((1 << g1_end) - 1)).bit_count(),
        g2=g2,
        v2=(g2_mask & ((1 << g2_end) - 1)).bit_count(),
        bridge=best_key[1],
        g1_alpha_critical=is_alpha_critical_graph(g1),
    )
    if not decomposition.g1_alpha_critical:
        logger.info("G1 разложения по мосту %s не alpha-критичен", decomposition.bridge)
    return decomposition


def _require_alpha_critical(g: Graph) -> None:
    if not is_alpha_critical_graph(g):
        raise InvalidArgumentError("graph is not alpha-critical")


def check_critical_vertex_identities(g: Graph, v: int) -> bool:
    """
    alpha(G) = alpha(G-v) = alpha(G-N[v]) + 1 для неизолированной v.

    Raises:
        InvalidArgumentError: G не alpha-критичен, v вне диапазона или изолирована.
    """
    if not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v} outside 0..{g.n - 1}")
    if g.degree(v) == 0:
        raise InvalidArgumentError(f"vertex {v} is isolated")
    _require_alpha_critical(g)
    alpha = stability_number(g)
    return (
        stability_number(delete_vertex(g, v)) == alpha
        and stability_number(delete_closed_neighborhood(g, v)) == alpha - 1
    )


def check_critical_connectivity(g: Graph) -> bool:
    """
    Связность G-v для всех v у связного alpha-критического графа.

    Raises:
        InvalidArgumentError: G несвязен или не alpha-критичен.
    """
    if not is_connected(g):
        raise InvalidArgumentError("graph is not connected")
    _require_alpha_critical(g)
    return all(is_connected(delete_vertex(g, v)) for v in range(g.n))
