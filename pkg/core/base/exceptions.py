"""
Иерархия исключений приложения.

Сервисы бросают только эти исключения; HTTP-слой и CLI
переводят их в коды ответа и коды выхода.
"""

__all__ = (
    "FibIndexError",
    "InvalidArgumentError",
    "GraphParseError",
    "CapabilityError",
)


class FibIndexError(Exception):
    """Базовое исключение приложения."""


class InvalidArgumentError(FibIndexError, ValueError):
    """Нарушено предусловие операции (неверная вершина, не ребро, ...)."""


class GraphParseError(InvalidArgumentError):
    """
    Ошибка разбора текстового списка рёбер.

    Attributes:
        line: Номер строки (с единицы), на которой найдена ошибка.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class CapabilityError(FibIndexError):
    """
    Вход превышает настроенный предел вычислительной возможности.

    Attributes:
        limit: Предел, который был превышен.
    """

    def __init__(self, what: str, value: int, limit: int) -> None:
        self.limit = limit
        self.value = value
        super().__init__(f"{what}: n={value} exceeds the configured limit {limit}")
