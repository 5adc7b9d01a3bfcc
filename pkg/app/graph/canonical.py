"""
Каноническая форма графа.

Точный минимум строки смежности по всем нумерациям, согласованным
с устойчивым разбиением вершин (degree -> color refinement). Перебор
нумераций - поиск с возвратом с отсечением по префиксу и по
вершинам-близнецам.
"""

from __future__ import annotations

from app.graph.model import CanonicalForm, Graph, iter_bits
from core.base.config import settings
from core.base.exceptions import CapabilityError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = ("canonical_form", "canonical_labeling", "refine_colors")


def refine_colors(g: Graph) -> list[int]:
    """
    Устойчивая раскраска вершин (1-мерный Weisfeiler-Leman).

    Начальный цвет - степень. Новые номера цветов назначаются по
    отсортированным сигнатурам, поэтому раскраска не зависит от
    исходной нумерации вершин.

    Args:
        g: Граф.

    Returns:
        list[int]: Цвет каждой вершины.
    """
    colors = g.degrees()
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [palette[sig] for sig in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _are_twins(g: Graph, v: int, w: int) -> bool:
    # транспозиция (v w) - автоморфизм, фиксирующий остальные вершины
    return g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v)


class _CanonicalSearch:
    """Поиск минимальной строки смежности с возвратом."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        colors = refine_colors(g)
        self.colors = colors
        self.targets = sorted(colors)
        self.best: tuple[int, ...] | None = None
        self.best_order: tuple[int, ...] = ()
        self.nodes = 0

    def run(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        self._extend([], [], 0)
        assert self.best is not None
        return self.best, self.best_order

    def _column(self, placed: list[int], v: int) -> int:
        # бит позиции i - старший для i = 0
        col = 0
        row = self.g.adj[v]
        for u in placed:
            col = col << 1 | (row >> u & 1)
        return col

    def _extend(self, placed: list[int], cols: list[int], used: int) -> None:
        self.nodes += 1
        k = len(placed)
        if k == self.g.n:
            current = tuple(cols)
            if self.best is None or current < self.best:
                self.best = current
                self.best_order = tuple(placed)
            return

        target = self.targets[k]
        candidates = sorted(
            (self._column(placed, v), v)
            for v in range(self.g.n)
            if not used >> v & 1 and self.colors[v] == target
        )
        tried: list[int] = []
        for col, v in candidates:
            if self.best is not None:
                prefix = (*cols, col)
                if prefix > self.best[: k + 1]:
                    break
            if any(_are_twins(self.g, u, v) for u in tried):
                continue
            tried.append(v)
            placed.append(v)
            cols.append(col)
            self._extend(placed, cols, used | 1 << v)
            placed.pop()
            cols.pop()


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """
    Каноническая форма и нумерация, на которой она достигается.

    Args:
        g: Граф порядка не выше CANONICAL_FORM_LIMIT.

    Returns:
        tuple[CanonicalForm, tuple[int, ...]]: Форма и порядок вершин:
            order[k] - исходная вершина на позиции k.

    Raises:
        CapabilityError: Порядок графа выше настроенного предела.
    """
    limit = settings.CANONICAL_FORM_LIMIT
    if g.n > limit:
        raise CapabilityError("canonical_form", g.n, limit)

    search = _CanonicalSearch(g)
    cols, order = search.run()
    bits = "".join(
        format(col, f"0{k}b") for k, col in enumerate(cols) if k > 0
    )
    logger.debug("Каноническая форма n=%d: %d узлов поиска", g.n, search.nodes)
    return CanonicalForm(g.n, bits), order


def canonical_form(g: Graph) -> CanonicalForm:
    """Отпечаток, равный для изоморфных графов и только для них."""
    return canonical_labeling(g)[0]
