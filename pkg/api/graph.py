from fastapi import APIRouter, Depends

from app.analysis.schema import ComputeReport, ComputeRequest
from app.analysis.service import AnalysisService, get_analysis_service
from core.base.schema import ResponseSchema

router = APIRouter(
    prefix="/api/v1/graph",
    tags=["graph"],
)


@router.post("/compute", response_model=ResponseSchema[ComputeReport])
def compute_graph(
    data: ComputeRequest,
    analysis_service: AnalysisService = Depends(get_analysis_service),
):
    """
    Вычислить F, alpha, критичность и границы для графа.

    Args:
        data: Ровно один источник графа: список рёбер или описание семейства.
        analysis_service: Сервис отчётов по графам.

    Returns:
        ResponseSchema[ComputeReport]: Тот же отчёт, что печатает ``compute --json``.

    Raises:
        GraphParseError: 422 с номером строки при ошибке формата.
        CapabilityError: 413 если граф больше допустимого.
    """
    return ResponseSchema(data=analysis_service.compute(data))
