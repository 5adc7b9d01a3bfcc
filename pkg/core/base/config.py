from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

from core.base.logger import LogLevel

MAX_VERTICES = 64


class Settings(BaseSettings):
    """
    Конфигурация приложения.

    Загружает настройки из переменных окружения и файла .env.

    Attributes:
        CANONICAL_FORM_LIMIT: Максимальный порядок графа для канонической формы.
        NAIVE_COUNT_LIMIT: Максимальный порядок для наивного перебора 2^n подмножеств.
        ENUMERATION_LIMIT: Максимальный порядок для перечисления неизоморфных графов.
        VERIFY_LIMIT: Порядок, до которого проверка теорем разрешена без флага.
        SEARCH_THREADS: Число процессов для исчерпывающего поиска.
        REPORT_DIR: Каталог для JSON-отчётов поиска.
        LOG_LEVEL: Уровень логирования.
        LOG_FILE: Файл для дублирования логов (опционально).
    """

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    CANONICAL_FORM_LIMIT: int = 10
    NAIVE_COUNT_LIMIT: int = 25
    ENUMERATION_LIMIT: int = 8
    VERIFY_LIMIT: int = 7
    SEARCH_THREADS: int = 1

    REPORT_DIR: Path = Path("reports")

    LOG_LEVEL: LogLevel = LogLevel.WARNING
    LOG_FILE: Path | None = None


settings = Settings()
