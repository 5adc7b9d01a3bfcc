from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx

from core.base.config import MAX_VERTICES
from core.base.exceptions import InvalidArgumentError

__all__ = ("Graph", "CanonicalForm", "iter_bits")


def iter_bits(mask: int) -> Iterator[int]:
    """Индексы установленных битов маски по возрастанию."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Неизменяемый простой неориентированный граф на вершинах 0..n-1.

    Смежность хранится битовыми строками: бит u в adj[v] установлен
    тогда и только тогда, когда uv - ребро.

    Attributes:
        n: Порядок графа.
        adj: Кортеж из n битовых масок смежности.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidArgumentError(
                f"vertex count {self.n} outside 0..{MAX_VERTICES}"
            )
        if len(self.adj) != self.n:
            raise InvalidArgumentError(
                f"expected {self.n} adjacency rows, got {len(self.adj)}"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidArgumentError(f"row {v} references a missing vertex")
            if row >> v & 1:
                raise InvalidArgumentError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def empty(cls, n: int) -> Graph:
        """Граф без рёбер на n вершинах."""
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """
        Построить граф по списку рёбер.

        Raises:
            InvalidArgumentError: Вершина вне диапазона или петля.
        """
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        """Маска N[v] = N(v) ∪ {v}."""
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Рёбра (u, v), u < v, в лексикографическом порядке."""
        return [
            (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> u << u)
        ]

    def is_clique(self) -> bool:
        return all(
            row == self.full_mask ^ (1 << v) for v, row in enumerate(self.adj)
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """
        Переименовать вершины: вершина v получает номер perm[v].

        Raises:
            InvalidArgumentError: perm не является перестановкой 0..n-1.
        """
        if sorted(perm) != list(range(self.n)):
            raise InvalidArgumentError("relabeling is not a permutation")
        return Graph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges())
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """
    Инвариантный к перенумерации отпечаток графа.

    bits - минимальная по всем допустимым нумерациям строка верхнего
    треугольника матрицы смежности, выписанная по столбцам:
    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

    Attributes:
        n: Порядок графа.
        bits: Строка из символов '0'/'1' длины n(n-1)/2.
    """

    n: int
    bits: str

    def __str__(self) -> str:
        return f"{self.n}:{self.bits}"

    @classmethod
    def parse(cls, text: str) -> CanonicalForm:
        """Разобрать строку вида "<n>:<bits>"."""
        head, _, bits = text.partition(":")
        if not head.isdigit() or set(bits) - {"0", "1"}:
            raise InvalidArgumentError(f"malformed canonical form {text!r}")
        n = int(head)
        if len(bits) != n * (n - 1) // 2:
            raise InvalidArgumentError(
                f"canonical form {text!r} has wrong length for n={n}"
            )
        return cls(n, bits)

    def to_graph(self) -> Graph:
        """Граф в канонической нумерации."""
        pairs = ((i, j) for j in range(self.n) for i in range(j))
        return Graph.from_edges(
            self.n, (pair for pair, bit in zip(pairs, self.bits) if bit == "1")
        )
