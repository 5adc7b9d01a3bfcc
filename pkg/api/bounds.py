from typing import Annotated

from fastapi import APIRouter, Depends, Query

from app.bounds.schema import BoundQuery, BoundValue
from app.bounds.service import BoundsService, get_bounds_service
from core.base.schema import ResponseSchema

router = APIRouter(
    prefix="/api/v1/bounds",
    tags=["bounds"],
)


@router.get("/turan", response_model=ResponseSchema[BoundValue])
def get_turan_bound(
    query: Annotated[BoundQuery, Query()],
    bounds_service: BoundsService = Depends(get_bounds_service),
):
    """Верхняя граница f_T(n, alpha) в классе всех графов."""
    return ResponseSchema(data=bounds_service.turan(query))


@router.get("/turan-connected", response_model=ResponseSchema[BoundValue])
def get_turan_connected_bound(
    query: Annotated[BoundQuery, Query()],
    bounds_service: BoundsService = Depends(get_bounds_service),
):
    """
    Верхняя граница f_TC(n, alpha) в классе связных графов.

    Raises:
        InvalidArgumentError: 422 если alpha вне 1..n-1.
    """
    return ResponseSchema(data=bounds_service.turan_connected(query))


@router.get("/tree", response_model=ResponseSchema[BoundValue])
def get_tree_bound(
    query: Annotated[BoundQuery, Query()],
    bounds_service: BoundsService = Depends(get_bounds_service),
):
    """Верхняя граница для деревьев (n/2 <= alpha <= n-1)."""
    return ResponseSchema(data=bounds_service.tree(query))


@router.get("/lower", response_model=ResponseSchema[BoundValue])
def get_lower_bound(
    query: Annotated[BoundQuery, Query()],
    bounds_service: BoundsService = Depends(get_bounds_service),
):
    """Нижняя граница 2^alpha + n - alpha, общая для всех классов."""
    return ResponseSchema(data=bounds_service.lower(query))
