from pydantic import ConfigDict, Field

from app.graph.model import Graph
from core.base.schema import BaseSchema


class GraphRead(BaseSchema):
    """Схема графа для JSON-вывода: порядок, размер и список рёбер."""

    # рёбра приходят из JSON списками, а не кортежами
    model_config = ConfigDict(strict=False)

    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    edges: list[tuple[int, int]]

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphRead":
        return cls(n=g.n, m=g.m, edges=g.edges())

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)
