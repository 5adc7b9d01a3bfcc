from enum import Enum

from pydantic import ConfigDict, Field

from core.base.schema import BaseSchema


class GraphFamily(str, Enum):
    """Семейства графов с фиксированной нумерацией вершин."""

    COMPLETE = "complete"
    EMPTY_COMPLEMENT = "empty-complement"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_SPLIT = "complete-split"
    TURAN = "turan"
    TURAN_CONNECTED = "turan-connected"


FAMILIES_WITH_ALPHA = frozenset(
    {GraphFamily.COMPLETE_SPLIT, GraphFamily.TURAN, GraphFamily.TURAN_CONNECTED}
)


class FamilySpec(BaseSchema):
    """
    Описание графа из именованного семейства.

    Attributes:
        family: Семейство.
        n: Порядок графа.
        alpha: Число устойчивости (только для complete-split, turan,
            turan-connected; для остальных игнорируется).
    """

    model_config = ConfigDict(strict=False)

    family: GraphFamily
    n: int = Field(..., ge=0)
    alpha: int | None = None

    def __str__(self) -> str:
        text = f"{self.family.value}:n={self.n}"
        if self.family in FAMILIES_WITH_ALPHA and self.alpha is not None:
            text += f",alpha={self.alpha}"
        return text
