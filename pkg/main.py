from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from core.base.config import settings
from core.base.exceptions import CapabilityError, InvalidArgumentError
from core.base.logger import get_logger, setup_logging
from core.base.schema import ResponseSchema

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Контекстный менеджер жизненного цикла приложения FastAPI.

    При старте настраивает логирование по значениям из settings.

    Args:
        app: Экземпляр FastAPI приложения.

    Yields:
        None: Приложение работает до завершения.
    """
    setup_logging(settings.LOG_LEVEL, settings.LOG_FILE)
    yield


app = FastAPI(
    title="Fibonacci index API",
    version="0.1.0",
    lifespan=lifespan,
)

from api import bounds, graph, search  # noqa: E402

app.include_router(graph.router)
app.include_router(bounds.router)
app.include_router(search.router)


@app.exception_handler(InvalidArgumentError)
async def invalid_argument_handler(request: Request, exc: InvalidArgumentError) -> JSONResponse:
    """Нарушенное предусловие или ошибка разбора - 422."""
    logger.info("%s %s: %s", request.method, request.url.path, exc)
    return JSONResponse(
        status_code=422, content={"detail": str(exc)}
    )


@app.exception_handler(CapabilityError)
async def capability_handler(request: Request, exc: CapabilityError) -> JSONResponse:
    """Размер задачи выше настроенного предела - 413."""
    logger.info("%s %s: %s", request.method, request.url.path, exc)
    return JSONResponse(
        status_code=413,
        content={"detail": str(exc), "limit": exc.limit},
    )


@app.get("/health", response_model=ResponseSchema[dict[str, str]])
async def health_check() -> ResponseSchema[dict[str, str]]:
    """
    Проверка состояния здоровья сервиса.

    Returns:
        ResponseSchema[dict[str, str]]: Словарь со статусом "ok" если сервис работает.
    """
    return ResponseSchema(data=dict(status="ok"))


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
