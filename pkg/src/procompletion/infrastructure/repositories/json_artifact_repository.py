import sys
from pathlib import Path
from typing import Any, BinaryIO, Dict, Optional, Tuple

import orjson
import structlog

from ...domain.entities.coefficients import Coefficient
from ...domain.entities.malcev import MalcevCoordinates
from ...domain.entities.series import Series, SeriesContext
from ...domain.entities.words import Word
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...shared.config.constants import Constants
from ...shared.exceptions import ParseError, RepositoryError
from ..serialization.json_codec import (
    decode_context,
    decode_lyndon_coefficients,
    decode_malcev,
    decode_series,
)

logger = structlog.get_logger(__name__)


class JsonArtifactRepository(ArtifactRepository):
    """orjson-backed document store; the path "-" means stdin/stdout"""

    OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2

    def __init__(self, stdin: Optional[BinaryIO] = None, stdout: Optional[BinaryIO] = None):
        self._stdin = stdin
        self._stdout = stdout

    def _read_bytes(self, path: str) -> bytes:
        if path == Constants.STDIO_PATH:
            stream = self._stdin or sys.stdin.buffer
            return stream.read()
        try:
            return Path(path).read_bytes()
        except OSError as e:
            logger.error("artifact_read_failed", path=path, error=str(e))
            raise RepositoryError(f"Failed to read {path}: {e}") from e

    def load(self, path: str) -> Any:
        content = self._read_bytes(path)
        try:
            return orjson.loads(content)
        except orjson.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON in {path}: {e}", path) from e

    @classmethod
    def dumps(cls, payload: Any) -> bytes:
        return orjson.dumps(payload, option=cls.OPTIONS) + b"\n"

    def save(self, path: str, payload: Any) -> None:
        self._write_bytes(path, self.dumps(payload))

    def save_text(self, path: str, text: str) -> None:
        self._write_bytes(path, text.encode("utf-8"))

    def _write_bytes(self, path: str, content: bytes) -> None:
        if path == Constants.STDIO_PATH:
            stream = self._stdout or sys.stdout.buffer
            stream.write(content)
            stream.flush()
            return
        try:
            target = Path(path)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(content)
        except OSError as e:
            logger.error("artifact_write_failed", path=path, error=str(e))
            raise RepositoryError(f"Failed to write {path}: {e}") from e
        logger.debug("artifact_saved", path=path, size=len(content))

    def exists(self, path: str) -> bool:
        return path == Constants.STDIO_PATH or Path(path).exists()

    def load_series(self, path: str) -> Series:
        series = decode_series(self.load(path))
        logger.debug("series_loaded", path=path, n=series.context.n, max_degree=series.max_degree)
        return series

    def load_coordinates(self, path: str) -> Tuple[SeriesContext, MalcevCoordinates]:
        return decode_malcev(self.load(path))

    def load_lyndon_coefficients(self, path: str) -> Tuple[SeriesContext, Dict[Word, Coefficient]]:
        payload = self.load(path)
        context = decode_context(payload)
        if Constants.KEY_TERMS not in payload:
            raise ParseError(f"Missing field(s): {Constants.KEY_TERMS}", path)
        return context, decode_lyndon_coefficients(payload[Constants.KEY_TERMS], context.n, context.ring)
