from enum import Enum

from pydantic import BaseModel, Field

from core.base.schema import BaseSchema, BigCountField


class GraphClass(str, Enum):
    """Класс графов, в котором рассматриваются границы."""

    GENERAL = "general"
    CONNECTED = "connected"
    TREE = "tree"


class BoundReport(BaseSchema):
    """
    Сравнение F(G) с нижней и верхней границами для класса графа.

    Attributes:
        n: Порядок.
        m: Размер.
        alpha: Число устойчивости.
        fib: F(G).
        lower: 2^alpha + n - alpha.
        upper: f_T(n, alpha) для general, f_TC(n, alpha) для connected и tree.
        lower_tight: F(G) = lower и G ≃ CS(n, alpha).
        upper_tight: F(G) = upper и G - один из экстремальных графов.
        within_bounds: lower <= F(G) <= upper.
        trivial_lower: Граница Продингера-Тихи снизу для класса.
        trivial_upper: Граница Продингера-Тихи сверху для класса.
        graph_class: Класс, для которого построен отчёт.
    """

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    alpha: int = Field(..., ge=1)
    fib: BigCountField
    lower: BigCountField
    upper: BigCountField
    lower_tight: bool
    upper_tight: bool
    within_bounds: bool
    trivial_lower: BigCountField
    trivial_upper: BigCountField
    graph_class: GraphClass


class BoundQuery(BaseModel):
    """Параметры запроса значения границы."""

    n: int = Field(..., ge=1, description="Порядок графа")
    alpha: int = Field(..., ge=1, description="Число устойчивости")


class BoundValue(BaseSchema):
    """Значение одной из границ при заданных n и alpha."""

    bound: str
    n: int
    alpha: int
    value: BigCountField
