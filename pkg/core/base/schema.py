from typing import Annotated, Generic, TypeVar

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

__all__ = (
    "BaseSchema",
    "BigCountField",
    "ResponseSchema",
    "ResponseListSchema",
)

T = TypeVar("T")


def _parse_big_count(value: object) -> object:
    if isinstance(value, str):
        if not value.isdigit():
            raise ValueError(f"not a nonnegative decimal integer: {value!r}")
        return int(value)
    return value


BigCountField = Annotated[
    int,
    BeforeValidator(_parse_big_count),
    PlainSerializer(str, return_type=str, when_used="json"),
]
"""Неограниченное целое; в JSON сериализуется десятичной строкой."""


class BaseSchema(BaseModel):
    """
    Базовая схема Pydantic для всех схем приложения.

    Настройки:
        - strict: Строгая проверка типов.
        - frozen: Отчёты неизменяемы после построения.
        - extra="forbid": Лишние поля при разборе отчёта запрещены.
    """

    model_config = ConfigDict(
        str_strip_whitespace=True,
        strict=True,
        frozen=True,
        extra="forbid",
    )


class ResponseSchema(BaseModel, Generic[T]):
    """
    Обёртка для единичного ответа API.

    Attributes:
        data: Данные ответа произвольного типа T.
    """

    data: T


class ResponseListSchema(BaseModel, Generic[T]):
    """
    Обёртка для списочного ответа API.

    Attributes:
        data: Список данных произвольного типа T.
    """

    data: list[T]
