"""
Текстовый формат списка рёбер.

    n m
    u v      (ровно m строк, 0 <= u < v < n)

Числа - десятичные ASCII, разделитель - один пробел, концы строк LF.
"""

from pathlib import Path

from app.graph.model import Graph
from core.base.config import MAX_VERTICES
from core.base.exceptions import GraphParseError

__all__ = ("parse_edge_list", "format_edge_list", "read_edge_list")


def _parse_ints(line: str, lineno: int, expected: int) -> list[int]:
    if "\r" in line:
        raise GraphParseError(lineno, "CR characters are not allowed (LF only)")
    parts = line.split(" ")
    if len(parts) != expected or not all(p.isascii() and p.isdigit() for p in parts):
        raise GraphParseError(
            lineno, f"expected {expected} single-space separated integers, got {line!r}"
        )
    return [int(p) for p in parts]


def parse_edge_list(text: str) -> Graph:
    """
    Разобрать граф из текстового списка рёбер.

    Args:
        text: Содержимое файла.

    Returns:
        Graph: Разобранный граф.

    Raises:
        GraphParseError: Любое нарушение формата; сообщение содержит номер строки.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphParseError(1, "missing header line 'n m'")

    n, m = _parse_ints(lines[0], 1, 2)
    if n > MAX_VERTICES:
        raise GraphParseError(1, f"vertex count {n} exceeds {MAX_VERTICES}")
    found = len(lines) - 1
    if found < m:
        raise GraphParseError(
            len(lines) + 1, f"header declares {m} edges, found only {found}"
        )
    if found > m:
        raise GraphParseError(m + 2, f"header declares {m} edges, found {found}")

    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _parse_ints(line, lineno, 2)
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        if not u < v:
            raise GraphParseError(lineno, f"edge must satisfy u < v, got {u} {v}")
        if v >= n:
            raise GraphParseError(lineno, f"vertex {v} outside 0..{n - 1}")
        if (u, v) in seen:
            raise GraphParseError(lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))

    return Graph.from_edges(n, sorted(seen))


def format_edge_list(g: Graph) -> str:
    """Записать граф в текстовый формат (обратная операция к parse_edge_list)."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]
    return "\n".join(lines) + "\n"


def read_edge_list(path: Path | str) -> Graph:
    """Прочитать граф из файла списка рёбер."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as e:
        raise GraphParseError(raw.count(b"\n", 0, e.start) + 1, "non-ASCII byte") from e
    return parse_edge_list(text)
