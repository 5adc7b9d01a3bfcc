from pydantic import Field

from core.base.schema import BaseSchema, BigCountField

BigCount = int
"""Число устойчивых множеств: неограниченное неотрицательное целое."""


class CountStats(BaseSchema):
    """
    Статистика одного вызова подсчёта.

    Attributes:
        branch_nodes: Число узлов ветвления (без попаданий в кэш).
        memo_hits: Число попаданий в кэш подзадач.
        elapsed: Время работы в секундах.
    """

    branch_nodes: int = Field(..., ge=0)
    memo_hits: int = Field(..., ge=0)
    elapsed: float = Field(..., ge=0)


class CountResult(BaseSchema):
    """Значение F(G) вместе со статистикой вычисления."""

    fib: BigCountField
    stats: CountStats
