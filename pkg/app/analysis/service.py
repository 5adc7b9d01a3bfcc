"""Сводный отчёт по графу: F, alpha, критичность, границы и разложение."""

from pathlib import Path

from app.analysis.schema import ComputeReport, ComputeRequest
from app.bounds.schema import GraphClass
from app.bounds.service import check_bounds
from app.counting.service import fibonacci_index
from app.criticality.schema import DecompositionRead
from app.criticality.service import (
    find_alpha_critical_decomposition,
    is_alpha_critical_graph,
    stability_number,
)
from app.generators.service import generate, parse_family_spec
from app.graph.io import parse_edge_list, read_edge_list
from app.graph.model import Graph
from app.graph.schema import GraphRead
from app.graph.service import is_connected, is_tree
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "detect_class",
    "analyze_graph",
    "load_graph",
    "graph_from_request",
    "AnalysisService",
    "get_analysis_service",
)


def detect_class(g: Graph) -> GraphClass:
    """Наиболее узкий класс графа: tree, затем connected, иначе general."""
    if is_tree(g):
        return GraphClass.TREE
    if is_connected(g):
        return GraphClass.CONNECTED
    return GraphClass.GENERAL


def analyze_graph(g: Graph) -> ComputeReport:
    """
    Вычислить все инварианты графа и сравнить F с границами его класса.

    Args:
        g: Граф (допускается n = 0; тогда границ и разложения нет).

    Returns:
        ComputeReport: Детерминированный отчёт без временных меток.
    """
    connected = is_connected(g)
    graph_class = detect_class(g)
    bounds = check_bounds(g, graph_class) if g.n >= 1 else None

    decomposition = None
    if connected and g.n >= 2:
        found = find_alpha_critical_decomposition(g)
        if found is not None:
            decomposition = DecompositionRead.from_decomposition(found)

    report = ComputeReport(
        graph=GraphRead.from_graph(g),
        n=g.n,
        m=g.m,
        alpha=stability_number(g),
        fib=fibonacci_index(g),
        alpha_critical=is_alpha_critical_graph(g),
        connected=connected,
        tree=graph_class is GraphClass.TREE,
        graph_class=graph_class,
        bounds=bounds,
        decomposition=decomposition,
    )
    logger.debug("Отчёт: n=%d m=%d alpha=%d F=%d", report.n, report.m, report.alpha, report.fib)
    return report


def load_graph(*, path: Path | str | None = None, generator: str | None = None) -> Graph:
    """
    Загрузить граф из файла списка рёбер или по описанию семейства.

    Raises:
        GraphParseError: Ошибка формата файла (с номером строки).
        InvalidArgumentError: Неверное описание семейства.
    """
    if path is not None:
        return read_edge_list(path)
    return generate(parse_family_spec(generator or ""))


def graph_from_request(request: ComputeRequest) -> Graph:
    """Граф из тела HTTP-запроса."""
    if request.edge_list is not None:
        return parse_edge_list(request.edge_list)
    return load_graph(generator=request.generator)


class AnalysisService:
    """Сервисный слой для отчётов по отдельным графам."""

    def compute(self, request: ComputeRequest) -> ComputeReport:
        """
        Построить отчёт по графу из тела запроса.

        Args:
            request: Ровно один источник: список рёбер или описание семейства.

        Returns:
            ComputeReport: Тот же отчёт, что печатает ``compute --json``.
        """
        g = graph_from_request(request)
        logger.debug("Отчёт по графу n=%d, m=%d", g.n, g.m)
        return analyze_graph(g)


def get_analysis_service() -> AnalysisService:
    """Фабрика AnalysisService для внедрения через Depends."""
    return AnalysisService()
