"""
Операции над графами: удаление вершин и рёбер, компоненты, мосты.

Все функции чистые: возвращают новый Graph, исходный не меняется.
Нумерация вершин после удаления сохраняет исходный порядок.
"""

from collections.abc import Sequence

import networkx as nx

from app.graph.model import Graph, iter_bits
from core.base.exceptions import InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "induced_subgraph",
    "component_masks",
    "delete_vertex",
    "delete_closed_neighborhood",
    "delete_edge",
    "connected_components",
    "is_connected",
    "is_tree",
    "bridges",
    "is_bridge",
    "disjoint_union",
)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v} outside 0..{g.n - 1}")


def _check_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise InvalidArgumentError(f"{u}-{v} is not an edge")


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """
    Подграф, порождённый вершинами маски, с перенумерацией по возрастанию.

    Args:
        g: Исходный граф.
        mask: Маска сохраняемых вершин.

    Returns:
        Graph: Порождённый подграф на popcount(mask) вершинах.
    """
    keep = list(iter_bits(mask & g.full_mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    """
    Маски связных компонент подграфа, порождённого mask.

    Компоненты упорядочены по наименьшей вершине.
    """
    components = []
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        component = frontier
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & remaining & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components


def delete_vertex(g: Graph, v: int) -> Graph:
    """
    Граф G-v.

    Raises:
        InvalidArgumentError: Вершина вне диапазона.
    """
    _check_vertex(g, v)
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """
    Граф G-N[v] на n - d(v) - 1 вершинах.

    Raises:
        InvalidArgumentError: Вершина вне диапазона.
    """
    _check_vertex(g, v)
    return induced_subgraph(g, g.full_mask & ~g.closed_neighborhood(v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """
    Граф G-e на том же множестве вершин.

    Raises:
        InvalidArgumentError: uv не является ребром.
    """
    _check_edge(g, u, v)
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def connected_components(g: Graph) -> list[Graph]:
    """Связные компоненты в порядке наименьшей исходной вершины."""
    return [induced_subgraph(g, c) for c in component_masks(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    """Не более одной компоненты; пустой граф считается связным."""
    return len(component_masks(g.adj, g.full_mask)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and nx.is_tree(g.to_networkx())


def bridges(g: Graph) -> list[tuple[int, int]]:
    """
    Все мосты графа (поиск в глубину с low-point, networkx).

    Returns:
        list[tuple[int, int]]: Мосты (u, v), u < v, по возрастанию.
    """
    found = sorted(tuple(sorted(e)) for e in nx.bridges(g.to_networkx()))
    logger.debug("Найдено мостов: %d (n=%d, m=%d)", len(found), g.n, g.m)
    return found


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """
    Является ли ребро uv мостом связного графа.

    Raises:
        InvalidArgumentError: uv не ребро или граф несвязен.
    """
    _check_edge(g, u, v)
    if not is_connected(g):
        raise InvalidArgumentError("is_bridge requires a connected graph")
    split = delete_edge(g, u, v)
    return len(component_masks(split.adj, split.full_mask)) == 2


def disjoint_union(*graphs: Graph) -> Graph:
    """Дизъюнктное объединение; вершины каждого графа идут блоком подряд."""
    rows: list[int] = []
    for h in graphs:
        offset = len(rows)
        rows.extend(row << offset for row in h.adj)
    return Graph(len(rows), tuple(rows))
