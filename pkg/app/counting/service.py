"""
Индекс Фибоначчи F(G) - число устойчивых множеств графа, включая пустое.

Основной алгоритм - ветвление с редукциями:

    F(G)        = F(G1) * ... * F(Gk)         для компонент G1..Gk
    F(G)        = F(G-v) + F(G-N[v])          v - вершина макс. степени
    F(K_n)      = n + 1,  F(K̄_n) = 2^n

Подзадачи - порождённые подграфы одного исходного графа, поэтому ключ
кэша - маска оставшихся вершин.
"""

import time

from app.counting.schema import BigCount, CountResult, CountStats
from app.graph.model import Graph, iter_bits
from app.graph.service import component_masks
from core.base.config import settings
from core.base.exceptions import CapabilityError, InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "FibonacciCounter",
    "fibonacci_index",
    "fibonacci_index_naive",
    "fibonacci_number",
    "fibonacci_of_path_closed",
)


class FibonacciCounter:
    """
    Подсчёт F(G) ветвлением с редукциями и кэшем подзадач.

    Кэш принадлежит экземпляру: один экземпляр - один граф.
    """

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._adj = g.adj
        self._memo: dict[int, int] = {}
        self.branch_nodes = 0
        self.memo_hits = 0

    def run(self) -> CountResult:
        """
        Посчитать F(G).

        Returns:
            CountResult: Значение и статистика вызова.
        """
        start = time.perf_counter()
        self._memo.clear()
        self.branch_nodes = self.memo_hits = 0
        fib = self._count(self.g.full_mask)
        elapsed = time.perf_counter() - start
        stats = CountStats(
            branch_nodes=self.branch_nodes, memo_hits=self.memo_hits, elapsed=elapsed
        )
        logger.debug(
            "F(G)=%d для n=%d, m=%d: %d узлов, %d попаданий в кэш, %.3f с",
            fib, self.g.n, self.g.m, self.branch_nodes, self.memo_hits, elapsed,
        )
        return CountResult(fib=fib, stats=stats)

    def _count(self, mask: int) -> int:
        if not mask:
            return 1
        adj = self._adj
        if all(not adj[v] & mask for v in iter_bits(mask)):
            return 1 << mask.bit_count()
        result = 1
        for component in component_masks(adj, mask):
            result *= self._count_connected(component)
        return result

    def _count_connected(self, mask: int) -> int:
        size = mask.bit_count()
        if size == 1:
            return 2
        cached = self._memo.get(mask)
        if cached is not None:
            self.memo_hits += 1
            return cached
        self.branch_nodes += 1

        adj = self._adj
        pivot, pivot_degree = -1, -1
        is_clique = True
        for v in iter_bits(mask):
            degree = (adj[v] & mask).bit_count()
            if degree != size - 1:
                is_clique = False
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree

        if is_clique:
            result = size + 1
        else:
            without = mask & ~(1 << pivot)
            outside = mask & ~(adj[pivot] | 1 << pivot)
            result = self._count(without) + self._count(outside)
        self._memo[mask] = result
        return result


def fibonacci_index(g: Graph) -> BigCount:
    """
    Точное число устойчивых множеств графа, включая пустое.

    Args:
        g: Граф (допускается пустой граф, F = 1).

    Returns:
        BigCount: F(G).
    """
    return FibonacciCounter(g).run().fib


def fibonacci_index_naive(g: Graph) -> BigCount:
    """
    F(G) перебором всех 2^n подмножеств вершин.

    Независимый оракул для проверки fibonacci_index. Подмножество
    устойчиво, если устойчиво оно без младшей вершины и младшая
    вершина не смежна с остальными.

    Raises:
        CapabilityError: n выше NAIVE_COUNT_LIMIT.
    """
    limit = settings.NAIVE_COUNT_LIMIT
    if g.n > limit:
        raise CapabilityError("fibonacci_index_naive", g.n, limit)

    adj = g.adj
    size = 1 << g.n
    stable = bytearray(size)
    stable[0] = 1
    count = 1
    for mask in range(1, size):
        rest = mask & (mask - 1)
        low = (mask ^ rest).bit_length() - 1
        if stable[rest] and not adj[low] & rest:
            stable[mask] = 1
            count += 1
    return count


def fibonacci_number(k: int) -> int:
    """Число Фибоначчи f_k, f_0 = 0, f_1 = 1."""
    if k < 0:
        raise InvalidArgumentError(f"Fibonacci index must be nonnegative, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_of_path_closed(n: int) -> BigCount:
    """F(P_n) = f_{n+2}."""
    if n < 0:
        raise InvalidArgumentError(f"path order must be nonnegative, got {n}")
    return fibonacci_number(n + 2)
