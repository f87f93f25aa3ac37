import logging
import os
from pathlib import Path
from typing import Optional, Union

from dotenv import dotenv_values
from pydantic import BaseModel, Field


class Settings(BaseModel):
    seed: int = 20240601
    window: int = Field(default=200, ge=1)
    max_band_letters: int = Field(default=10, ge=1)
    progress: bool = True
    log_level: str = "WARNING"
    data_dir: Path = Path("data")


_ENV_KEYS = {
    "seed": "STURMBRICK_SEED",
    "window": "STURMBRICK_WINDOW",
    "max_band_letters": "STURMBRICK_MAX_BAND_LETTERS",
    "progress": "STURMBRICK_PROGRESS",
    "log_level": "STURMBRICK_LOG_LEVEL",
    "data_dir": "STURMBRICK_DATA_DIR",
}


def read_dotenv(path: Optional[Path] = None) -> Optional[Path]:
    """Copy the STURMBRICK_* entries of a .env file into the environment.

    Variables that are already set keep their value; other keys in the file
    are ignored. Returns the file read, or None when there is none.
    """
    path = path or Path.cwd() / ".env"
    if not path.is_file():
        return None
    for key, value in dotenv_values(path).items():
        if key in _ENV_KEYS.values() and value is not None:
            os.environ.setdefault(key, value)
    return path


def _data_dir(raw: str) -> Path:
    return Path(raw).expanduser().resolve()


def load_settings() -> Settings:
    """Build Settings from STURMBRICK_* variables (after reading .env)."""
    read_dotenv()
    raw = {field: os.getenv(key) for field, key in _ENV_KEYS.items()}
    values = {field: value for field, value in raw.items() if value not in (None, "")}
    if "data_dir" in values:
        values["data_dir"] = _data_dir(values["data_dir"])
    return Settings(**values)


def configure_logging(level: Union[str, int, None] = None) -> None:
    if level is None:
        level = os.getenv("STURMBRICK_LOG_LEVEL", "WARNING")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("sturmbrick").setLevel(level)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
