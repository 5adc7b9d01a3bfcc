from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.bounds.schema import GraphClass
from core.base.schema import BaseSchema, BigCountField


class Theorem(str, Enum):
    """Проверяемые утверждения."""

    LOWER_T5 = "lower-T5"
    GENERAL_T7 = "general-T7"
    CONNECTED_T9 = "connected-T9"
    MIN_SIZE_GENERAL = "min-size-general"


class AlphaRecord(BaseSchema):
    """
    Экстремальные значения F для фиксированного alpha.

    Attributes:
        alpha: Число устойчивости.
        min_fib: Наименьший F в классе.
        max_fib: Наибольший F в классе.
        minimizers: Канонические формы графов с F = min_fib.
        maximizers: Канонические формы графов с F = max_fib.
        graph_count: Число неизоморфных графов с данным alpha.
        min_size: Наименьшее число рёбер.
        min_size_graphs: Канонические формы графов наименьшего размера.
    """

    alpha: int = Field(..., ge=1)
    min_fib: BigCountField
    max_fib: BigCountField
    minimizers: list[str] = Field(..., min_length=1)
    maximizers: list[str] = Field(..., min_length=1)
    graph_count: int = Field(..., ge=1)
    min_size: int = Field(..., ge=0)
    min_size_graphs: list[str] = Field(..., min_length=1)


class ExtremalReport(BaseSchema):
    """Результат исчерпывающего поиска для порядка n и класса графов."""

    n: int = Field(..., ge=0)
    graph_class: GraphClass
    records: list[AlphaRecord]
    enumeration_total: int = Field(..., ge=0)


class SizeRecord(BaseSchema):
    """Диапазон F внутри G(n, m, alpha)."""

    alpha: int
    m: int
    graph_count: int
    min_fib: BigCountField
    max_fib: BigCountField


class SizeReport(BaseSchema):
    """Сырые данные по классам G(n, m, alpha) без выводов."""

    n: int
    graph_class: GraphClass
    records: list[SizeRecord]


class Discrepancy(BaseSchema):
    """Расхождение между ожидаемыми и найденными экстремальными графами."""

    alpha: int
    graph_class: GraphClass
    expected: list[str]
    observed: list[str]
    note: str = ""


class VerificationVerdict(BaseSchema):
    """
    Вердикт проверки одного утверждения при данном n.

    passed (в JSON - "pass") истинно тогда и только тогда, когда
    расхождений нет. notes - сведения, не влияющие на вердикт
    (например, учтённые исключительные максимизаторы).
    """

    model_config = ConfigDict(populate_by_name=True)

    theorem: Theorem
    n: int
    passed: bool = Field(..., alias="pass")
    discrepancies: list[Discrepancy]
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _pass_matches_discrepancies(self) -> "VerificationVerdict":
        if self.passed != (not self.discrepancies):
            raise ValueError("pass must hold exactly when there are no discrepancies")
        return self


class GraphSummary(BaseSchema):
    """Основные инварианты графа."""

    n: int
    m: int
    alpha: int
    fib: BigCountField


class ScalingCheck(BaseSchema):
    """Сравнение k непересекающихся копий G3 и G4."""

    copies: int
    g3: GraphSummary
    g4: GraphSummary
    holds: bool


class StarTuranPair(BaseSchema):
    """Пара T(2r, r) и S_2r: меньше рёбер, но и меньше устойчивых множеств."""

    r: int
    turan_m: int
    star_m: int
    turan_fib: BigCountField
    star_fib: BigCountField
    holds: bool


class CounterexampleReport(BaseSchema):
    """Примеры, где больше рёбер не означает меньше устойчивых множеств."""

    g3: GraphSummary
    g4: GraphSummary
    holds: bool
    scaling: list[ScalingCheck]
    star_turan: list[StarTuranPair]


class SearchQuery(BaseModel):
    """Параметры запроса исчерпывающего поиска."""

    n: int = Field(..., ge=1, description="Порядок графов")
    graph_class: GraphClass = Field(GraphClass.GENERAL, description="general или connected")
