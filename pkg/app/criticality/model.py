from dataclasses import dataclass

from app.graph.model import Graph


@dataclass(frozen=True, slots=True)
class Decomposition:
    """
    Разложение (G1, v1, G2, v2) по alpha-безопасному мосту.

    Attributes:
        g1: Компонента G-e меньшего порядка.
        v1: Конец моста в нумерации g1.
        g2: Вторая компонента G-e.
        v2: Конец моста в нумерации g2.
        bridge: Мост (u, v), u < v, в нумерации исходного графа.
        g1_alpha_critical: Является ли g1 alpha-критическим.
    """

    g1: Graph
    v1: int
    g2: Graph
    v2: int
    bridge: tuple[int, int]
    g1_alpha_critical: bool
