import os
from typing import List

from dotenv import load_dotenv

load_dotenv()


def _int_list(raw: str) -> List[int]:
    return [int(x) for x in raw.replace(",", " ").split()]


class Settings:
    # API settings
    API_V1_STR: str = "/api/v1"
    PROJECT_NAME: str = "Quadblock API"
    VERSION: str = "1.0.0"
    DESCRIPTION: str = "4-block trees of embedded planar triangulations"

    # CORS settings
    BACKEND_CORS_ORIGINS: List[str] = [
        "http://localhost:3000",
        "http://localhost:8080",
        "http://127.0.0.1:3000",
        "http://127.0.0.1:8080",
    ]

    # Environment
    ENVIRONMENT: str = os.getenv("ENVIRONMENT", "development")
    DEBUG: bool = ENVIRONMENT == "development"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "DEBUG" if DEBUG else "INFO").upper()

    # Generator settings
    DEFAULT_SEED: int = int(os.getenv("QB_SEED", "20240601"))

    # Verification settings
    VERIFY_WORKERS: int = int(os.getenv("QB_VERIFY_WORKERS", str(min(8, os.cpu_count() or 1))))
    ORACLE_MAX_N: int = int(os.getenv("QB_ORACLE_MAX_N", "400"))

    # Benchmark settings
    BENCH_SIZES: List[int] = _int_list(os.getenv("QB_BENCH_SIZES", "1024 2048 4096 8192 16384"))


settings = Settings()
