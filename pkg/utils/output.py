import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from designs.errors import PermDesignError

logger = logging.getLogger(__name__)


def write_stdout(message: str):
    sys.stdout.write(message if message.endswith("\n") else message + "\n")


def write_file(message: str, path: Optional[str]):
    if not path:
        raise PermDesignError("file output requested without a path")
    Path(path).write_text(message if message.endswith("\n") else message + "\n", encoding="utf-8")
    logger.info(f"✅ wrote {path}")


def render(payload, fmt: str = "text") -> str:
    """JSON for pydantic models when asked; their str() / the payload itself otherwise."""
    if isinstance(payload, BaseModel) and fmt == "json":
        return payload.model_dump_json(indent=2)
    return str(payload)


def emit(message: str, channels=("stdout",), path: Optional[str] = None):
    if "stdout" in channels:
        write_stdout(message)
    if "file" in channels:
        write_file(message, path)
