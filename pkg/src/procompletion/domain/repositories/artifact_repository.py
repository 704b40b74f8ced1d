from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

from ..entities.coefficients import Coefficient
from ..entities.malcev import MalcevCoordinates
from ..entities.series import Series, SeriesContext
from ..entities.words import Word


class ArtifactRepository(ABC):
    """Abstract store for JSON documents (series, tensors, coordinates, reports)"""

    @abstractmethod
    def load(self, path: str) -> Any:
        """Read and parse the document at path"""
        pass

    @abstractmethod
    def save(self, path: str, payload: Any) -> None:
        """Write payload as canonical JSON"""
        pass

    @abstractmethod
    def save_text(self, path: str, text: str) -> None:
        """Write a plain-text rendering"""
        pass

    @abstractmethod
    def exists(self, path: str) -> bool:
        """Check if a document exists"""
        pass

    @abstractmethod
    def load_series(self, path: str) -> Series:
        """Read a truncated series"""
        pass

    @abstractmethod
    def load_coordinates(self, path: str) -> Tuple[SeriesContext, MalcevCoordinates]:
        """Read Malcev coordinates together with the context they live in"""
        pass

    @abstractmethod
    def load_lyndon_coefficients(self, path: str) -> Tuple[SeriesContext, Dict[Word, Coefficient]]:
        """Read prescribed coefficients c_L indexed by Lyndon words"""
        pass
