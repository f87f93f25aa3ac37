__all__ = [
    "load_settings",
    "read_dotenv",
    "Settings",
    "SturmbrickError",
]

from .config import Settings, load_settings, read_dotenv
from .errors import SturmbrickError
