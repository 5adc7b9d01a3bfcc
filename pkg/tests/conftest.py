import pytest
from fastapi.testclient import TestClient

from app.generators.schema import FamilySpec, GraphFamily
from app.generators.service import generate
from app.graph.model import Graph
from app.search import service as search_service


def family(name: str, n: int, alpha: int | None = None) -> Graph:
    """Граф именованного семейства: family("turan", 7, 3)."""
    return generate(FamilySpec(family=GraphFamily(name), n=n, alpha=alpha))


@pytest.fixture
def make_family():
    return family


@pytest.fixture
def c5() -> Graph:
    return family("cycle", 5)


@pytest.fixture
def t73() -> Graph:
    return family("turan", 7, 3)


@pytest.fixture
def tc73() -> Graph:
    return family("turan-connected", 7, 3)


@pytest.fixture
def p4() -> Graph:
    return family("path", 4)


@pytest.fixture
def fresh_scan_cache(monkeypatch):
    """Пустой кэш скана: следующий вызов действительно перечисляет графы."""
    monkeypatch.setattr(search_service, "_SCAN_CACHE", {})


@pytest.fixture(scope="session")
def client():
    from main import app

    with TestClient(app) as test_client:
        yield test_client
