from typing import Dict, Optional, Tuple

import structlog

from ...domain.entities.coefficients import Coefficient
from ...domain.entities.malcev import MalcevCoordinates
from ...domain.entities.series import Series, SeriesContext
from ...domain.entities.words import LyndonOrder, Word
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...domain.services.group import (
    is_in_group,
    malcev_compose,
    malcev_decompose,
    reconstruct_from_lyndon_coeffs,
)
from ...domain.services.lie import decompose_lie

logger = structlog.get_logger(__name__)


class MalcevUseCase:
    """Use case for Malcev coordinates of grouplike series"""

    def __init__(self, artifact_repository: ArtifactRepository):
        self.artifact_repository = artifact_repository

    def load_series(self, path: str) -> Series:
        return self.artifact_repository.load_series(path)

    def load_coordinates(self, path: str) -> Tuple[SeriesContext, MalcevCoordinates]:
        return self.artifact_repository.load_coordinates(path)

    def load_prescribed(self, path: str) -> Tuple[SeriesContext, Dict[Word, Coefficient]]:
        return self.artifact_repository.load_lyndon_coefficients(path)

    def decompose(self, g: Series, order: Optional[LyndonOrder] = None) -> Optional[MalcevCoordinates]:
        """Coordinates of g, or None when g is not grouplike"""
        if not is_in_group(g):
            logger.info("malcev_decompose_rejected", reason="not grouplike")
            return None
        coordinates = malcev_decompose(g, order)
        logger.info(
            "malcev_decompose",
            order=coordinates.order.name,
            nonzero=len(coordinates.nonzero()),
            integral=coordinates.is_integral(),
        )
        return coordinates

    def compose(
        self, context: SeriesContext, coordinates: MalcevCoordinates, order: Optional[LyndonOrder] = None
    ) -> Series:
        g = malcev_compose(context, coordinates, order)
        logger.info("malcev_compose", order=(order or coordinates.order).name, terms=len(g))
        return g

    def reconstruct(
        self,
        context: SeriesContext,
        prescribed: Dict[Word, Coefficient],
        order: Optional[LyndonOrder] = None,
    ) -> Tuple[Series, MalcevCoordinates]:
        g, coordinates = reconstruct_from_lyndon_coeffs(context, prescribed, order)
        logger.info("malcev_reconstruct", prescribed=len(prescribed), terms=len(g))
        return g, coordinates

    def lie(self, z: Series) -> Dict[Word, Coefficient]:
        """Coordinates of a primitive series in the basis xi_L"""
        coefficients = decompose_lie(z)
        logger.info("malcev_lie", nonzero=len(coefficients))
        return coefficients
