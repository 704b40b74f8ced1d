from dataclasses import dataclass
from typing import Optional

import structlog

from ...domain.entities.series import Series
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...domain.services.coproduct import GrouplikeViolation, grouplike_violation, is_primitive
from ...domain.services.group import is_in_closure
from ...shared.config.constants import Coproduct

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class CheckOutcome:
    """Verdict of one property test, with the first violated equation if any"""
    prop: str
    holds: bool
    reason: Optional[str] = None
    violation: Optional[GrouplikeViolation] = None


class CheckUseCase:
    """Use case for grouplike, primitive and integrality tests"""

    def __init__(self, artifact_repository: ArtifactRepository):
        self.artifact_repository = artifact_repository

    def grouplike(self, path: str, which: Coproduct = Coproduct.TWISTED) -> CheckOutcome:
        g = self.artifact_repository.load_series(path)
        return self.check_grouplike(g, which)

    def check_grouplike(self, g: Series, which: Coproduct = Coproduct.TWISTED) -> CheckOutcome:
        if not g.has_unit_constant():
            outcome = CheckOutcome("grouplike", False, reason="constant term is not 1")
        else:
            violation = grouplike_violation(g, which)
            outcome = CheckOutcome(
                "grouplike",
                violation is None,
                reason=None if violation is None else "quadratic equation fails",
                violation=violation,
            )
        logger.info("check_grouplike", coproduct=which.value, holds=outcome.holds)
        return outcome

    def primitive(self, path: str) -> CheckOutcome:
        z = self.artifact_repository.load_series(path)
        if not z.ring.is_zero(z.constant_term()):
            outcome = CheckOutcome("primitive", False, reason="constant term is not 0")
        else:
            holds = is_primitive(z)
            outcome = CheckOutcome("primitive", holds, reason=None if holds else "coproduct has mixed terms")
        logger.info("check_primitive", holds=outcome.holds)
        return outcome

    def integral(self, path: str) -> CheckOutcome:
        g = self.artifact_repository.load_series(path)
        holds = g.is_integral()
        logger.info("check_integral", holds=holds, ring=g.ring.name)
        return CheckOutcome("integral", holds, reason=None if holds else "a coefficient is not integral")

    def closure(self, path: str) -> CheckOutcome:
        g = self.artifact_repository.load_series(path)
        holds = is_in_closure(g)
        logger.info("check_closure", holds=holds)
        return CheckOutcome("closure", holds, reason=None if holds else "not integral and grouplike")
