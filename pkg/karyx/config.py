"""
Environment-backed settings.

Values are read from the process environment; the CLI entry point calls
``load_dotenv()`` first, so a local ``.env`` file (see ``env.example``)
works too.
"""
import os
from typing import Literal

from pydantic import BaseModel, Field, ValidationError, field_validator

from .exceptions import UsageError

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    tolerance: float = Field(default=1e-9, gt=0)
    trials: int = Field(default=200, ge=1)
    seed: int = Field(default=7, ge=0)
    log_level: str = "WARNING"
    # "ignore": w_0 = 0 convention for Hsiao-Raghavan; "error": strict reading
    hr_zero_level: Literal["ignore", "error"] = "ignore"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        try:
            return cls(
                tolerance=os.getenv("KARYX_TOLERANCE", "1e-9"),
                trials=os.getenv("KARYX_TRIALS", "200"),
                seed=os.getenv("KARYX_SEED", "7"),
                log_level=os.getenv("KARYX_LOG_LEVEL", "WARNING"),
                hr_zero_level=os.getenv("KARYX_HR_ZERO_LEVEL", "ignore"),
            )
        except ValidationError as e:
            raise UsageError(f"Invalid KARYX_* environment settings: {e}") from e
