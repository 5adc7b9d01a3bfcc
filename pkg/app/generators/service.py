"""
Детерминированные конструкторы графов из именованных семейств.

Нумерация вершин фиксирована, поэтому одинаковые FamilySpec дают
побайтно одинаковые структуры смежности:

    turan            - клики идут подряд блоками начиная с 0, первые
                       p = n mod alpha клик имеют ceil(n/alpha) вершин;
    turan-connected  - та же нумерация, центр 0 (в наибольшей клике)
                       соединён с наименьшей вершиной каждой другой клики;
    complete-split   - устойчивое множество 0..alpha-1, клика alpha..n-1;
    star             - центр 0.
"""

import random

from app.generators.schema import FAMILIES_WITH_ALPHA, FamilySpec, GraphFamily
from app.graph.canonical import canonical_form
from app.graph.model import Graph
from app.graph.service import disjoint_union
from core.base.config import MAX_VERTICES
from core.base.exceptions import InvalidArgumentError
from core.base.logger import get_logger

logger = get_logger(__name__)

__all__ = (
    "generate",
    "parse_family_spec",
    "family_identities_check",
    "turan_blocks",
    "random_graph",
    "disjoint_copies",
)

_FAMILY_ALIASES = {"empty": GraphFamily.EMPTY_COMPLEMENT}
_SPEC_KEYS = frozenset({"n", "alpha"})


def turan_blocks(n: int, alpha: int) -> list[range]:
    """Блоки вершин клик графа Турана T(n, alpha) в фиксированной нумерации."""
    q, p = divmod(n, alpha)
    blocks = []
    start = 0
    for i in range(alpha):
        size = q + 1 if i < p else q
        blocks.append(range(start, start + size))
        start += size
    return blocks


def _clique_edges(block: range) -> list[tuple[int, int]]:
    return [(u, v) for u in block for v in block if u < v]


def _check_spec(spec: FamilySpec) -> None:
    n, alpha = spec.n, spec.alpha
    family = spec.family
    if n > MAX_VERTICES:
        raise InvalidArgumentError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")
    if family in FAMILIES_WITH_ALPHA:
        if alpha is None:
            raise InvalidArgumentError(f"{family.value} requires alpha")
        upper = n - 1 if family is GraphFamily.TURAN_CONNECTED else n
        if not 1 <= alpha <= upper:
            bound = "n-1" if family is GraphFamily.TURAN_CONNECTED else "n"
            raise InvalidArgumentError(
                f"{family.value} requires 1 <= alpha <= {bound}, got n={n}, alpha={alpha}"
            )
    if family in (GraphFamily.PATH, GraphFamily.STAR) and n < 1:
        raise InvalidArgumentError(f"{family.value} requires n >= 1")
    if family is GraphFamily.CYCLE and n < 3:
        raise InvalidArgumentError(f"cycle requires n >= 3, got n={n}")


def generate(spec: FamilySpec) -> Graph:
    """
    Построить граф по описанию семейства.

    Args:
        spec: Семейство, порядок и (при необходимости) alpha.

    Returns:
        Graph: Граф в фиксированной нумерации.

    Raises:
        InvalidArgumentError: Нарушено ограничение семейства (в частности,
            turan-connected при alpha = n не определён).
    """
    _check_spec(spec)
    n = spec.n
    alpha = spec.alpha or 0
    logger.debug("Генерация %s", spec)

    match spec.family:
        case GraphFamily.COMPLETE:
            edges = _clique_edges(range(n))
        case GraphFamily.EMPTY_COMPLEMENT:
            edges = []
        case GraphFamily.PATH:
            edges = [(i, i + 1) for i in range(n - 1)]
        case GraphFamily.CYCLE:
            edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        case GraphFamily.STAR:
            edges = [(0, i) for i in range(1, n)]
        case GraphFamily.COMPLETE_SPLIT:
            edges = _clique_edges(range(alpha, n))
            edges += [(s, c) for s in range(alpha) for c in range(alpha, n)]
        case GraphFamily.TURAN:
            edges = [e for block in turan_blocks(n, alpha) for e in _clique_edges(block)]
        case GraphFamily.TURAN_CONNECTED:
            blocks = turan_blocks(n, alpha)
            edges = [e for block in blocks for e in _clique_edges(block)]
            edges += [(0, block.start) for block in blocks[1:]]

    return Graph.from_edges(n, edges)


def parse_family_spec(text: str) -> FamilySpec:
    """
    Разобрать строку вида ``family:key=value,...``.

    Примеры: ``turan:n=7,alpha=3``, ``path:n=5``.

    Raises:
        InvalidArgumentError: Неизвестное семейство, ключ или нечисловое значение.
    """
    name, sep, rest = text.strip().partition(":")
    if not sep:
        raise InvalidArgumentError(f"generator spec {text!r} lacks ':'")
    try:
        family = _FAMILY_ALIASES.get(name) or GraphFamily(name)
    except ValueError:
        known = ", ".join(f.value for f in GraphFamily)
        raise InvalidArgumentError(f"unknown family {name!r} (known: {known})")

    params: dict[str, int] = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq or key not in _SPEC_KEYS:
            raise InvalidArgumentError(f"unknown or malformed key {item!r} in {text!r}")
        if not (value.isascii() and value.isdigit()):
            raise InvalidArgumentError(f"value of {key!r} must be a nonnegative integer")
        if key in params:
            raise InvalidArgumentError(f"duplicate key {key!r} in {text!r}")
        params[key] = int(value)

    if "n" not in params:
        raise InvalidArgumentError(f"generator spec {text!r} lacks n")
    return FamilySpec(family=family, n=params["n"], alpha=params.get("alpha"))


def family_identities_check(n: int) -> bool:
    """
    Проверить изоморфизмы между семействами при данном n.

    T(n,1) ≃ TC(n,1) ≃ CS(n,1) ≃ K_n; T(n,n) ≃ CS(n,n) ≃ K̄_n;
    TC(n,n-1) ≃ CS(n,n-1) ≃ S_n.

    Raises:
        InvalidArgumentError: n < 3.
        CapabilityError: n выше предела канонической формы.
    """
    if n < 3:
        raise InvalidArgumentError(f"family_identities_check requires n >= 3, got {n}")

    def form(family: GraphFamily, alpha: int | None = None):
        return canonical_form(generate(FamilySpec(family=family, n=n, alpha=alpha)))

    groups = [
        [
            form(GraphFamily.TURAN, 1),
            form(GraphFamily.TURAN_CONNECTED, 1),
            form(GraphFamily.COMPLETE_SPLIT, 1),
            form(GraphFamily.COMPLETE),
        ],
        [
            form(GraphFamily.TURAN, n),
            form(GraphFamily.COMPLETE_SPLIT, n),
            form(GraphFamily.EMPTY_COMPLEMENT),
        ],
        [
            form(GraphFamily.TURAN_CONNECTED, n - 1),
            form(GraphFamily.COMPLETE_SPLIT, n - 1),
            form(GraphFamily.STAR),
        ],
    ]
    return all(len(set(group)) == 1 for group in groups)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """
    Случайный граф Эрдёша-Реньи G(n, p).

    Поток random.Random(seed): ровно одно значение random() на пару
    (u, v), u < v, в лексикографическом порядке; ребро, если значение < p.

    Raises:
        InvalidArgumentError: p вне [0, 1].
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def disjoint_copies(g: Graph, k: int) -> Graph:
    """k непересекающихся копий графа."""
    if k < 0:
        raise InvalidArgumentError(f"copy count must be nonnegative, got {k}")
    return disjoint_union(*([g] * k))
