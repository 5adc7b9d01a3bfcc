"""
Перечисление неизоморфных графов малого порядка.

Основная стратегия - расширение: каждый граф на k вершинах получается
из представителя класса на k-1 вершинах добавлением вершины с
произвольным множеством соседей; дубликаты отсекаются по канонической
форме. Список родителей делится на непрерывные блоки между процессами,
результаты объединяются и сортируются, поэтому вывод не зависит от
числа процессов.

Альтернативная стратегия - проверка каноничности всех 2^(n(n-1)/2)
помеченных графов - оставлена для перекрёстной проверки при малых n.
"""

import sys
from collections.abc import Iterator
from functools import lru_cache
from multiprocessing import Pool
from typing import TypeVar

from tqdm import tqdm

from app.graph.canonical import canonical_form
from app.graph.model import CanonicalForm, Graph
from app.graph.service import is_connected
from core.base.config import settings
from core.base.exceptions import CapabilityError, InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

__all__ = (
    "enumerate_labeled_graphs",
    "enumerate_graphs",
    "enumerate_graphs_by_canonicity",
    "representatives",
    "split_static",
    "run_static",
)


def split_static(items: list[T], parts: int) -> list[list[T]]:
    """Разбить список на не более чем parts непрерывных блоков."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks = []
    start = 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return [chunk for chunk in chunks if chunk]


def run_static(func, chunks: list, threads: int, desc: str, progress: bool) -> list:
    """
    Применить func к блокам, в пуле процессов при threads > 1.

    Порядок результатов совпадает с порядком блоков.
    """
    bar = dict(desc=desc, total=len(chunks), disable=not progress, file=sys.stderr)
    if threads > 1 and len(chunks) > 1:
        with Pool(processes=min(threads, len(chunks))) as pool:
            return list(tqdm(pool.imap(func, chunks), **bar))
    return [func(chunk) for chunk in tqdm(chunks, **bar)]


def _pairs(n: int) -> list[tuple[int, int]]:
    # порядок пар совпадает с порядком битов канонической формы
    return [(i, j) for j in range(n) for i in range(j)]


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Все 2^(n(n-1)/2) помеченных графов на n вершинах по маске рёбер."""
    pairs = _pairs(n)
    for edge_mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, (pair for k, pair in enumerate(pairs) if edge_mask >> k & 1)
        )


def _check_order(n: int) -> None:
    if n < 0:
        raise InvalidArgumentError(f"order must be nonnegative, got {n}")
    limit = settings.ENUMERATION_LIMIT
    if n > limit:
        raise CapabilityError("enumerate_graphs", n, limit)


def _extend_chunk(parents: list[str]) -> list[str]:
    found: set[str] = set()
    for text in parents:
        parent = CanonicalForm.parse(text).to_graph()
        k = parent.n
        for subset in range(1 << k):
            rows = [row | (subset >> v & 1) << k for v, row in enumerate(parent.adj)]
            rows.append(subset)
            found.add(str(canonical_form(Graph(k + 1, tuple(rows)))))
    return sorted(found)


@lru_cache(maxsize=16)
def representatives(n: int, threads: int = 1, progress: bool = False) -> tuple[str, ...]:
    """
    Канонические формы всех классов изоморфизма графов на n вершинах.

    Args:
        n: Порядок.
        threads: Число процессов для последнего и предпоследних уровней.
        progress: Показывать прогресс в stderr.

    Returns:
        tuple[str, ...]: Отсортированные строковые канонические формы.
    """
    _check_order(n)
    level: list[str] = [str(CanonicalForm(0, ""))]
    for k in range(1, n + 1):
        chunks = split_static(level, threads * 4)
        results = run_static(_extend_chunk, chunks, threads, f"n={k}", progress)
        level = sorted(set().union(*results))
        logger.debug("Порядок %d: %d классов изоморфизма", k, len(level))
    return tuple(level)


def enumerate_graphs(
    n: int, connected_only: bool = False, threads: int = 1
) -> Iterator[Graph]:
    """
    По одному представителю на класс изоморфизма, в канонической нумерации.

    Raises:
        CapabilityError: n выше ENUMERATION_LIMIT.
    """
    for text in representatives(n, threads):
        g = CanonicalForm.parse(text).to_graph()
        if not connected_only or is_connected(g):
            yield g


def enumerate_graphs_by_canonicity(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """
    То же перечисление через проверку каноничности помеченных графов.

    Граф оставляется, если его собственная строка смежности совпадает с
    канонической формой. Стоимость 2^(n(n-1)/2) канонизаций.
    """
    _check_order(n)
    pairs = _pairs(n)
    for g in enumerate_labeled_graphs(n):
        own = "".join("1" if g.has_edge(i, j) else "0" for i, j in pairs)
        if canonical_form(g).bits == own and (not connected_only or is_connected(g)):
            yield g
