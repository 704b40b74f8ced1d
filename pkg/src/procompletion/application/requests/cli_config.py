import random
from typing import List, Literal, Optional, Sequence

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import factorint, isprime

from ...domain.entities.coefficients import RingTag
from ...domain.entities.words import LyndonOrder, Word, lyndon_words
from ...shared.config.constants import Constants
from ...shared.exceptions import ValidationError


class CliConfig(BaseModel):
    """Validated command line request"""

    command: str
    action: str
    n: Optional[int] = Field(default=None, ge=1)
    degree: Optional[int] = Field(default=None, ge=1)
    ring: Literal["int", "rat", "padic"] = "rat"
    p: Optional[int] = None
    prec: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    pm: Optional[int] = Field(default=None, ge=2)
    nu: Optional[int] = Field(default=None, ge=1)
    order: Optional[Literal["graded", "lex", "custom", "random"]] = None
    ranking: Optional[List[List[int]]] = None
    seed: int = 0
    word: Optional[str] = None
    t: Optional[str] = None
    steps: int = Field(default=8, ge=1)
    coproduct: Literal["standard", "twisted"] = "twisted"
    enumerate: bool = False
    inputs: List[str] = Field(default_factory=list)
    output: str = Constants.STDIO_PATH
    text: bool = False

    model_config = {"extra": "forbid"}

    @field_validator("p")
    @classmethod
    def _prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @model_validator(mode="after")
    def _resolve_prime_power(self) -> "CliConfig":
        if self.pm is not None:
            factors = factorint(self.pm)
            if len(factors) != 1:
                raise ValueError(f"--pm {self.pm} is not a prime power")
            ((prime, exponent),) = factors.items()
            if self.p is not None and self.p != prime:
                raise ValueError(f"--pm {self.pm} disagrees with --p {self.p}")
            if self.m is not None and self.m != exponent:
                raise ValueError(f"--pm {self.pm} disagrees with --m {self.m}")
            self.p, self.m = int(prime), int(exponent)
        if self.ring == Constants.RING_PADIC and self.p is None:
            raise ValueError("The padic ring needs --p")
        if self.order == Constants.ORDER_CUSTOM and not self.ranking:
            raise ValueError("--order custom needs --ranking")
        return self

    def ring_tag(self, default_precision: int = 20) -> RingTag:
        if self.ring == Constants.RING_INT:
            return RingTag.integer()
        if self.ring == Constants.RING_RAT:
            return RingTag.rational()
        return RingTag.padic(self.p, self.prec or default_precision)

    def lyndon_order(
        self, n: int, max_degree: int, rng: Optional[random.Random] = None
    ) -> Optional[LyndonOrder]:
        """The requested factor order; None leaves the choice to the operation"""
        if self.order is None:
            return None
        if self.order == Constants.ORDER_LEX:
            return LyndonOrder.lex()
        if self.order == Constants.ORDER_CUSTOM:
            ranking: Sequence[Word] = [tuple(w) for w in self.ranking or []]
            return LyndonOrder.from_ranking(ranking)
        if self.order == Constants.ORDER_RANDOM:
            rng = rng or random.Random(self.seed)
            return LyndonOrder.random(lyndon_words(n, max_degree), rng)
        return LyndonOrder.graded()

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise ValidationError(f"{self.command} {self.action} needs {flags}")
