from typing import List, Sequence

import structlog

from ...domain.entities.coefficients import Coefficient
from ...domain.entities.group_word import GroupWord
from ...domain.entities.series import Series, SeriesContext, group_commutator
from ...domain.entities.tensor import TensorSeries
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...domain.services.coproduct import coproduct, gamma, gamma_inv
from ...domain.services.group import magnus_embed
from ...domain.services.lie import bch
from ...shared.config.constants import Coproduct
from ...shared.exceptions import ContextMismatchError, ValidationError

logger = structlog.get_logger(__name__)


class SeriesUseCase:
    """Use case for arithmetic on truncated series read from documents"""

    def __init__(self, artifact_repository: ArtifactRepository):
        self.artifact_repository = artifact_repository

    def load(self, path: str) -> Series:
        return self.artifact_repository.load_series(path)

    def load_all(self, paths: Sequence[str]) -> List[Series]:
        series = [self.load(path) for path in paths]
        for g in series[1:]:
            if g.context != series[0].context:
                raise ContextMismatchError(series[0].context, g.context)
        return series

    def embed(self, context: SeriesContext, word: GroupWord) -> Series:
        g = magnus_embed(context, word)
        logger.info("series_embed", word=str(word), n=context.n, max_degree=context.max_degree)
        return g

    def multiply(self, paths: Sequence[str]) -> Series:
        factors = self.load_all(paths)
        if not factors:
            raise ValidationError("mul needs at least one --in")
        result = factors[0]
        for g in factors[1:]:
            result = result * g
        logger.info("series_mul", factors=len(factors), terms=len(result))
        return result

    def inverse(self, path: str) -> Series:
        return self.load(path).inverse()

    def exp(self, path: str) -> Series:
        return self.load(path).exp()

    def ln(self, path: str) -> Series:
        return self.load(path).ln()

    def power(self, path: str, t: Coefficient) -> Series:
        g = self.load(path)
        logger.info("series_pow", t=str(t), ring=g.ring.name)
        return g.power(t)

    def commutator(self, paths: Sequence[str]) -> Series:
        g, h = self._pair(paths, "comm")
        return group_commutator(g, h)

    def bch(self, paths: Sequence[str]) -> Series:
        u, v = self._pair(paths, "bch")
        return bch(u, v)

    def gamma(self, path: str, inverse: bool = False) -> Series:
        g = self.load(path)
        return gamma_inv(g) if inverse else gamma(g)

    def coproduct(self, path: str, which: Coproduct) -> TensorSeries:
        g = self.load(path)
        tensor = coproduct(g, which)
        logger.info("series_coproduct", coproduct=which.value, terms=len(tensor.terms()))
        return tensor

    def _pair(self, paths: Sequence[str], action: str) -> List[Series]:
        if len(paths) != 2:
            raise ValidationError(f"{action} needs exactly two --in documents")
        return self.load_all(paths)
