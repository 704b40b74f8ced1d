from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import structlog

from ...domain.entities.coefficients import PAdic, RingKind, RingTag
from ...domain.entities.series import Series, SeriesContext
from ...domain.entities.subgroup import ConvergenceReport, OpenSubgroupSpec
from ...domain.entities.words import LyndonOrder, Word, lyndon_words, sigma
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...domain.services.completions import (
    coset_coordinates,
    enumerate_coordinate_cosets,
    in_open_subgroup,
    integer_power_limit,
    order_mod_subgroup,
    quotient_order,
    recommended_precision,
)
from ...shared.config.settings import Settings
from ...shared.exceptions import PrecisionError, ValidationError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class QuotientSummary:
    """Size of G / U(nu, p^m) counted two ways, against p^(m * sigma(nu))"""
    spec: OpenSubgroupSpec
    n: int
    order: int
    coordinate_cosets: int
    expected: int


class PadicUseCase:
    """Use case for open subgroups, cosets and p-adic limits"""

    def __init__(self, artifact_repository: ArtifactRepository, settings: Settings):
        self.artifact_repository = artifact_repository
        self.settings = settings

    def precision_for(
        self, spec: OpenSubgroupSpec, max_degree: int, requested: Optional[int] = None
    ) -> int:
        if requested is not None:
            return requested
        return max(
            self.settings.padic_precision,
            recommended_precision(spec, max_degree, self.settings.precision_margin),
        )

    def load_padic(self, path: str, spec: OpenSubgroupSpec, prec: Optional[int] = None) -> Series:
        """The series at path with coefficients moved into Z_p"""
        g = self.artifact_repository.load_series(path)
        if g.ring.kind is RingKind.PADIC:
            if g.ring.p != spec.p:
                raise ValidationError(f"Document is {g.ring.name}, expected p = {spec.p}")
            if prec is not None and prec > g.ring.prec:
                raise PrecisionError(prec, g.ring.prec, spec.p)
            return g
        return g.change_ring(RingTag.padic(spec.p, self.precision_for(spec, g.max_degree, prec)))

    def member(self, path: str, spec: OpenSubgroupSpec, prec: Optional[int] = None) -> bool:
        g = self.load_padic(path, spec, prec)
        result = in_open_subgroup(g, spec)
        logger.info("padic_member", spec=str(spec), member=result)
        return result

    def order(self, path: str, spec: OpenSubgroupSpec, prec: Optional[int] = None) -> int:
        g = self.load_padic(path, spec, prec)
        result = order_mod_subgroup(g, spec, limit=self.settings.order_search_limit)
        logger.info("padic_order", spec=str(spec), order=result)
        return result

    def coset(self, g: Series, spec: OpenSubgroupSpec, order: Optional[LyndonOrder] = None) -> Dict[Word, int]:
        """Residues of the Malcev coordinates of g modulo p^m, degrees <= nu"""
        residues = coset_coordinates(g, spec, order)
        logger.info("padic_coset", spec=str(spec), words=len(residues))
        return residues

    def enumerate(
        self, n: int, spec: OpenSubgroupSpec, order: Optional[LyndonOrder] = None
    ) -> Tuple[List[Word], FrozenSet[Tuple[int, ...]]]:
        order = order or LyndonOrder.graded()
        words = lyndon_words(n, spec.nu, order)
        return words, enumerate_coordinate_cosets(n, spec, order)

    def quotient(self, n: int, spec: OpenSubgroupSpec) -> QuotientSummary:
        _, cosets = self.enumerate(n, spec)
        summary = QuotientSummary(
            spec=spec,
            n=n,
            order=quotient_order(n, spec),
            coordinate_cosets=len(cosets),
            expected=spec.expected_index(n),
        )
        logger.info("padic_quotient", spec=str(spec), sigma=sigma(n, spec.nu), order=summary.order)
        return summary

    def converge(
        self, context: SeriesContext, word: Word, t: PAdic, steps: int
    ) -> ConvergenceReport:
        """Xi_L^{k_i} against Xi_L^t for k_i the residue of t mod p^i, i = 1..steps"""
        if steps < 1:
            raise ValidationError("--steps must be >= 1", "steps", steps)
        approximations = [t.reduce(i) for i in range(1, steps + 1)]
        report = integer_power_limit(context, word, t, approximations)
        logger.info("padic_converge", word=list(word), final=report.final_agreement())
        return report
