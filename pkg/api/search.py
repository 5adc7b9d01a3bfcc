from typing import Annotated

from fastapi import APIRouter, Depends, Query

from app.search.schema import (
    CounterexampleReport,
    ExtremalReport,
    SearchQuery,
    VerificationVerdict,
)
from app.search.service import SearchService, get_search_service
from core.base.schema import ResponseListSchema, ResponseSchema

router = APIRouter(
    prefix="/api/v1/search",
    tags=["search"],
)


@router.get("/counterexample", response_model=ResponseSchema[CounterexampleReport])
def get_counterexample(
    search_service: SearchService = Depends(get_search_service),
):
    """Графы одного порядка, где больше рёбер даёт больший F."""
    return ResponseSchema(data=search_service.counterexample())


@router.get("/report", response_model=ResponseSchema[ExtremalReport])
def get_extremal_report(
    query: Annotated[SearchQuery, Query()],
    search_service: SearchService = Depends(get_search_service),
):
    """
    Экстремальные графы по alpha для порядка n.

    Args:
        query: Порядок и класс графов.
        search_service: Сервис исчерпывающего поиска.

    Raises:
        CapabilityError: 413 если n больше VERIFY_LIMIT.
    """
    return ResponseSchema(data=search_service.extremal_report(query))


@router.get("/verify", response_model=ResponseListSchema[VerificationVerdict])
def get_verification(
    n: Annotated[int, Query(ge=1, description="Порядок графов")],
    search_service: SearchService = Depends(get_search_service),
):
    """Проверить нижнюю и верхние границы на всех графах порядка n."""
    return ResponseListSchema(data=search_service.verify(n))
