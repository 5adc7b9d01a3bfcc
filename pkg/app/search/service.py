"""
Исчерпывающий поиск экстремальных графов и проверка теорем.

Один проход по классам изоморфизма на n вершинах даёт для каждого
графа (каноническая форма, F, alpha, m, связность); отчёты для
общего и связного класса строятся из одних и тех же записей.
"""

import json
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from app.bounds.schema import GraphClass
from app.bounds.service import (
    MAXIMIZER_OVERRIDES,
    expected_maximizers,
    expected_minimizers,
    lower_bound,
    upper_bound,
)
from app.counting.service import fibonacci_index
from app.criticality.service import is_alpha_critical_graph, stability_number
from app.generators.schema import FamilySpec, GraphFamily
from app.generators.service import disjoint_copies, generate
from app.graph.canonical import canonical_form
from app.graph.model import CanonicalForm, Graph
from app.graph.service import disjoint_union, is_connected
from app.search.enumeration import representatives, run_static, split_static
from app.search.schema import (
    AlphaRecord,
    CounterexampleReport,
    Discrepancy,
    ExtremalReport,
    GraphSummary,
    ScalingCheck,
    SearchQuery,
    SizeRecord,
    SizeReport,
    StarTuranPair,
    Theorem,
    VerificationVerdict,
)
from core.base.config import settings
from core.base.exceptions import CapabilityError, InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "GraphRecord",
    "scan_graphs",
    "build_extremal_report",
    "build_size_report",
    "verify_theorems",
    "counterexample_size_vs_fib",
    "write_report",
    "write_verdicts",
    "SearchService",
    "get_search_service",
)

SEARCH_CLASSES = (GraphClass.GENERAL, GraphClass.CONNECTED)

# результат скана не зависит от числа процессов
_SCAN_CACHE: dict[int, tuple["GraphRecord", ...]] = {}


@dataclass(frozen=True, slots=True)
class GraphRecord:
    """Инварианты одного представителя класса изоморфизма."""

    form: str
    fib: int
    alpha: int
    m: int
    connected: bool


def _record_chunk(forms: list[str]) -> list[GraphRecord]:
    records = []
    for text in forms:
        g = CanonicalForm.parse(text).to_graph()
        records.append(
            GraphRecord(
                form=text,
                fib=fibonacci_index(g),
                alpha=stability_number(g),
                m=g.m,
                connected=is_connected(g),
            )
        )
    return records


def _check_search_order(n: int, allow_n8: bool) -> None:
    if n < 1:
        raise InvalidArgumentError(f"search requires n >= 1, got {n}")
    limit = settings.ENUMERATION_LIMIT if allow_n8 else settings.VERIFY_LIMIT
    if n > limit:
        raise CapabilityError("extremal search", n, limit)


def _scan(n: int, threads: int, progress: bool) -> tuple[GraphRecord, ...]:
    if n in _SCAN_CACHE:
        return _SCAN_CACHE[n]
    forms = list(representatives(n, threads, progress))
    chunks = split_static(forms, threads * 4)
    results = run_static(_record_chunk, chunks, threads, f"scan n={n}", progress)
    records = sorted((r for chunk in results for r in chunk), key=lambda r: r.form)
    logger.info("Просмотрено %d неизоморфных графов на %d вершинах", len(records), n)
    _SCAN_CACHE[n] = tuple(records)
    return _SCAN_CACHE[n]


def scan_graphs(
    n: int,
    *,
    threads: int | None = None,
    allow_n8: bool = False,
    progress: bool = False,
) -> tuple[GraphRecord, ...]:
    """
    Инварианты всех неизоморфных графов на n вершинах.

    Args:
        n: Порядок (1..VERIFY_LIMIT, или до ENUMERATION_LIMIT с allow_n8).
        threads: Число процессов (по умолчанию SEARCH_THREADS).
        allow_n8: Разрешить долгий прогон выше VERIFY_LIMIT.
        progress: Показывать прогресс в stderr.

    Returns:
        tuple[GraphRecord, ...]: Записи, отсортированные по канонической форме.

    Raises:
        CapabilityError: n выше разрешённого предела.
    """
    _check_search_order(n, allow_n8)
    return _scan(n, threads or settings.SEARCH_THREADS, progress)


def _in_class(record: GraphRecord, graph_class: GraphClass) -> bool:
    return graph_class is GraphClass.GENERAL or record.connected


def _alpha_record(alpha: int, group: list[GraphRecord]) -> AlphaRecord:
    min_fib = min(r.fib for r in group)
    max_fib = max(r.fib for r in group)
    min_size = min(r.m for r in group)
    return AlphaRecord(
        alpha=alpha,
        min_fib=min_fib,
        max_fib=max_fib,
        minimizers=[r.form for r in group if r.fib == min_fib],
        maximizers=[r.form for r in group if r.fib == max_fib],
        graph_count=len(group),
        min_size=min_size,
        min_size_graphs=[r.form for r in group if r.m == min_size],
    )


def build_extremal_report(
    n: int,
    graph_class: GraphClass,
    *,
    threads: int | None = None,
    allow_n8: bool = False,
    progress: bool = False,
) -> ExtremalReport:
    """
    Наименьший и наибольший F для каждого alpha в классе графов.

    Args:
        n: Порядок.
        graph_class: general или connected.
        threads: Число процессов; на результат не влияет.
        allow_n8: Разрешить n = 8.
        progress: Показывать прогресс в stderr.

    Returns:
        ExtremalReport: Записи по alpha и число просмотренных графов класса.

    Raises:
        InvalidArgumentError: Класс tree не поддерживается поиском.
        CapabilityError: n выше разрешённого предела.
    """
    if graph_class not in SEARCH_CLASSES:
        raise InvalidArgumentError(f"search supports general/connected, got {graph_class.value}")
    records = scan_graphs(n, threads=threads, allow_n8=allow_n8, progress=progress)

    by_alpha: dict[int, list[GraphRecord]] = defaultdict(list)
    total = 0
    for record in records:
        if _in_class(record, graph_class):
            by_alpha[record.alpha].append(record)
            total += 1

    return ExtremalReport(
        n=n,
        graph_class=graph_class,
        records=[_alpha_record(a, by_alpha[a]) for a in sorted(by_alpha)],
        enumeration_total=total,
    )


def build_size_report(
    n: int,
    graph_class: GraphClass,
    *,
    threads: int | None = None,
    allow_n8: bool = False,
) -> SizeReport:
    """Диапазоны F по классам G(n, m, alpha) (только данные, без выводов)."""
    if graph_class not in SEARCH_CLASSES:
        raise InvalidArgumentError(f"search supports general/connected, got {graph_class.value}")
    records = scan_graphs(n, threads=threads, allow_n8=allow_n8)
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for record in records:
        if _in_class(record, graph_class):
            groups[record.alpha, record.m].append(record.fib)
    return SizeReport(
        n=n,
        graph_class=graph_class,
        records=[
            SizeRecord(
                alpha=alpha,
                m=m,
                graph_count=len(values),
                min_fib=min(values),
                max_fib=max(values),
            )
            for (alpha, m), values in sorted(groups.items())
        ],
    )


def _forms(graphs: list[Graph]) -> list[str]:
    return sorted(str(canonical_form(g)) for g in graphs)


def _verdict(
    theorem: Theorem,
    n: int,
    discrepancies: list[Discrepancy],
    notes: list[str] | None = None,
) -> VerificationVerdict:
    for d in discrepancies:
        logger.warning(
            "%s n=%d alpha=%d (%s): ожидалось %s, найдено %s %s",
            theorem.value, n, d.alpha, d.graph_class.value, d.expected, d.observed, d.note,
        )
    return VerificationVerdict(
        theorem=theorem,
        n=n,
        passed=not discrepancies,
        discrepancies=discrepancies,
        notes=notes or [],
    )


def _check_lower(n: int, reports: dict[GraphClass, ExtremalReport]) -> VerificationVerdict:
    discrepancies = []
    for graph_class, report in reports.items():
        for rec in report.records:
            expected = _forms(expected_minimizers(n, rec.alpha))
            value = lower_bound(n, rec.alpha)
            if rec.minimizers != expected or rec.min_fib != value:
                discrepancies.append(
                    Discrepancy(
                        alpha=rec.alpha,
                        graph_class=graph_class,
                        expected=expected,
                        observed=rec.minimizers,
                        note=f"expected min F={value}, found {rec.min_fib}",
                    )
                )
    return _verdict(Theorem.LOWER_T5, n, discrepancies)


def _check_upper(
    n: int, report: ExtremalReport, theorem: Theorem
) -> VerificationVerdict:
    discrepancies = []
    notes = []
    for rec in report.records:
        extras = MAXIMIZER_OVERRIDES.get((report.graph_class, n, rec.alpha), ())
        if extras:
            names = ", ".join(str(spec) for spec in extras)
            notes.append(f"alpha={rec.alpha}: exceptional maximizer {names}")
            logger.info("%s n=%d: %s", theorem.value, n, notes[-1])
        expected = _forms(expected_maximizers(n, rec.alpha, report.graph_class))
        value = upper_bound(n, rec.alpha, report.graph_class)
        if rec.maximizers != expected or rec.max_fib != value:
            discrepancies.append(
                Discrepancy(
                    alpha=rec.alpha,
                    graph_class=report.graph_class,
                    expected=expected,
                    observed=rec.maximizers,
                    note=f"expected max F={value}, found {rec.max_fib}",
                )
            )
        if report.graph_class is GraphClass.GENERAL:
            non_critical = [
                form
                for form in rec.maximizers
                if not is_alpha_critical_graph(CanonicalForm.parse(form).to_graph())
            ]
            if non_critical:
                discrepancies.append(
                    Discrepancy(
                        alpha=rec.alpha,
                        graph_class=report.graph_class,
                        expected=[],
                        observed=non_critical,
                        note="maximizers that are not alpha-critical",
                    )
                )
    return _verdict(theorem, n, discrepancies, notes)


def _check_min_size(n: int, report: ExtremalReport) -> VerificationVerdict:
    discrepancies = [
        Discrepancy(
            alpha=rec.alpha,
            graph_class=report.graph_class,
            expected=rec.maximizers,
            observed=rec.min_size_graphs,
            note="graphs of minimum size differ from the F maximizers",
        )
        for rec in report.records
        if rec.min_size_graphs != rec.maximizers
    ]
    return _verdict(Theorem.MIN_SIZE_GENERAL, n, discrepancies)


def verify_theorems(
    n: int,
    *,
    threads: int | None = None,
    allow_n8: bool = False,
    progress: bool = False,
) -> list[VerificationVerdict]:
    """
    Проверить нижнюю границу и обе верхние границы на всех графах порядка n.

    Для каждого alpha: минимизаторы в обоих классах - ровно CS(n, alpha)
    со значением 2^alpha + n - alpha; максимизаторы общего класса - ровно
    T(n, alpha) (и все они alpha-критичны); максимизаторы связного класса -
    ровно TC(n, alpha) с учётом таблицы исключений; графы наименьшего
    размера в общем классе совпадают с максимизаторами F.

    Returns:
        list[VerificationVerdict]: Вердикты в порядке lower, general, connected,
            min-size.

    Raises:
        CapabilityError: n выше разрешённого предела.
    """
    reports = {
        graph_class: build_extremal_report(
            n, graph_class, threads=threads, allow_n8=allow_n8, progress=progress
        )
        for graph_class in SEARCH_CLASSES
    }
    verdicts = [
        _check_lower(n, reports),
        _check_upper(n, reports[GraphClass.GENERAL], Theorem.GENERAL_T7),
        _check_upper(n, reports[GraphClass.CONNECTED], Theorem.CONNECTED_T9),
        _check_min_size(n, reports[GraphClass.GENERAL]),
    ]
    logger.info(
        "Проверка n=%d: %s",
        n,
        ", ".join(f"{v.theorem.value}={'ok' if v.passed else 'FAIL'}" for v in verdicts),
    )
    return verdicts


def _summary(g: Graph) -> GraphSummary:
    return GraphSummary(n=g.n, m=g.m, alpha=stability_number(g), fib=fibonacci_index(g))


def _spider_g4() -> Graph:
    # центр 0, висячие 1, 2, 3 и путь 0-4-5
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])


def counterexample_size_vs_fib() -> CounterexampleReport:
    """
    Графы одного порядка, где больше рёбер даёт больше устойчивых множеств.

    G3 = P_3 ⊎ P_3 и паук G4 лежат в G(6, 4), m(G3) < m(G4) и F(G3) < F(G4);
    то же для k копий. Пара T(2r, r) и S_2r даёт 3^r < 2^(2r-1) + 1
    при меньшем числе рёбер у T(2r, r), r = 3..10.
    """
    p3 = generate(FamilySpec(family=GraphFamily.PATH, n=3))
    g3 = disjoint_union(p3, p3)
    g4 = _spider_g4()
    s3, s4 = _summary(g3), _summary(g4)
    base_holds = (
        s3.n == s4.n == 6 and s3.alpha == s4.alpha == 4 and s3.m < s4.m and s3.fib < s4.fib
    )

    scaling = []
    for k in (2, 3):
        k3, k4 = _summary(disjoint_copies(g3, k)), _summary(disjoint_copies(g4, k))
        scaling.append(
            ScalingCheck(
                copies=k,
                g3=k3,
                g4=k4,
                holds=k3.alpha == k4.alpha and k3.m < k4.m and k3.fib < k4.fib,
            )
        )

    pairs = []
    for r in range(3, 11):
        turan = generate(FamilySpec(family=GraphFamily.TURAN, n=2 * r, alpha=r))
        star = generate(FamilySpec(family=GraphFamily.STAR, n=2 * r))
        turan_fib, star_fib = fibonacci_index(turan), fibonacci_index(star)
        pairs.append(
            StarTuranPair(
                r=r,
                turan_m=turan.m,
                star_m=star.m,
                turan_fib=turan_fib,
                star_fib=star_fib,
                holds=(
                    turan_fib == 3**r
                    and star_fib == 2 ** (2 * r - 1) + 1
                    and turan.m < star.m
                    and turan_fib < star_fib
                ),
            )
        )

    holds = base_holds and all(c.holds for c in scaling) and all(p.holds for p in pairs)
    return CounterexampleReport(
        g3=s3, g4=s4, holds=holds, scaling=scaling, star_turan=pairs
    )


def write_report(report: ExtremalReport, directory: Path) -> Path:
    """
    Записать отчёт в ``report-<class>-n<order>.json``.

    Returns:
        Path: Путь к записанному файлу.
    """
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"report-{report.graph_class.value}-n{report.n}.json"
    path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("Отчёт записан: %s", path)
    return path


def write_verdicts(verdicts: list[VerificationVerdict], n: int, directory: Path) -> Path:
    """Записать вердикты проверки в ``verify-n<order>.json``."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"verify-n{n}.json"
    payload = [v.model_dump(mode="json", by_alias=True) for v in verdicts]
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    logger.info("Вердикты записаны: %s", path)
    return path


class SearchService:
    """Сервисный слой исчерпывающего поиска для HTTP."""

    def __init__(self, threads: int):
        """
        Инициализация сервиса поиска.

        Args:
            threads: Число процессов для перебора.
        """
        self.threads = threads

    def extremal_report(self, query: SearchQuery) -> ExtremalReport:
        return build_extremal_report(query.n, query.graph_class, threads=self.threads)

    def verify(self, n: int) -> list[VerificationVerdict]:
        return verify_theorems(n, threads=self.threads)

    def counterexample(self) -> CounterexampleReport:
        return counterexample_size_vs_fib()


def get_search_service() -> SearchService:
    """
    Фабрика для создания экземпляра SearchService.

    Returns:
        SearchService: Сервис с числом процессов из настроек.
    """
    return SearchService(threads=settings.SEARCH_THREADS)
