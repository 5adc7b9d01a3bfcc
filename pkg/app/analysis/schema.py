from pydantic import ConfigDict, Field, model_validator

from app.bounds.schema import BoundReport, GraphClass
from app.criticality.schema import DecompositionRead
from app.graph.schema import GraphRead
from core.base.schema import BaseSchema, BigCountField


class ComputeRequest(BaseSchema):
    """
    Источник графа для вычисления.

    Attributes:
        edge_list: Текст в формате списка рёбер.
        generator: Описание семейства вида ``family:key=value,...``.
    """

    # формат списка рёбер чувствителен к пробелам
    model_config = ConfigDict(str_strip_whitespace=False)

    edge_list: str | None = None
    generator: str | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "ComputeRequest":
        if (self.edge_list is None) == (self.generator is None):
            raise ValueError("exactly one of edge_list or generator is required")
        return self


class ComputeReport(BaseSchema):
    """
    Полный отчёт по одному графу.

    Attributes:
        graph: Сам граф (рёбра в лексикографическом порядке).
        n: Порядок.
        m: Размер.
        alpha: Число устойчивости.
        fib: F(G).
        alpha_critical: Все рёбра alpha-критические.
        connected: Граф связен.
        tree: Граф - дерево.
        graph_class: Наиболее узкий класс, к которому относится граф.
        bounds: Сравнение с границами класса (None для пустого графа).
        decomposition: Разложение по alpha-безопасному мосту, если есть.
    """

    graph: GraphRead
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    alpha: int = Field(..., ge=0)
    fib: BigCountField
    alpha_critical: bool
    connected: bool
    tree: bool
    graph_class: GraphClass
    bounds: BoundReport | None
    decomposition: DecompositionRead | None
