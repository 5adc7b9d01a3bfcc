from app.criticality.model import Decomposition
from app.graph.schema import GraphRead
from core.base.schema import BaseSchema


class DecompositionRead(BaseSchema):
    """Схема разложения по alpha-безопасному мосту для JSON-вывода."""

    g1: GraphRead
    v1: int
    g2: GraphRead
    v2: int
    bridge: tuple[int, int]
    g1_alpha_critical: bool

    @classmethod
    def from_decomposition(cls, d: Decomposition) -> "DecompositionRead":
        return cls(
            g1=GraphRead.from_graph(d.g1),
            v1=d.v1,
            g2=GraphRead.from_graph(d.g2),
            v2=d.v2,
            bridge=d.bridge,
            g1_alpha_critical=d.g1_alpha_critical,
        )
