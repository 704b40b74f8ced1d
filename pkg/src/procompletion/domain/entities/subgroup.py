from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from sympy import isprime

from ...shared.exceptions import PreconditionError
from .words import Word, sigma


@dataclass(frozen=True)
class OpenSubgroupSpec:
    """
    U(nu, p^m): grouplike series whose coefficients of degree 1..nu
    lie in p^m Z_p.
    """
    nu: int
    p: int
    m: int

    def __post_init__(self):
        if self.nu < 1:
            raise PreconditionError(f"nu must be >= 1, got {self.nu}", "open_subgroup")
        if self.m < 1:
            raise PreconditionError(f"m must be >= 1, got {self.m}", "open_subgroup")
        if not isprime(self.p):
            raise PreconditionError(f"{self.p} is not prime", "open_subgroup")

    @property
    def modulus(self) -> int:
        return self.p ** self.m

    @property
    def index_hypothesis(self) -> bool:
        """p^m > nu, the customary side condition on U(nu, p^m)"""
        return self.modulus > self.nu

    @property
    def binomials_periodic(self) -> bool:
        """
        nu < p: every C(a, j) with j <= nu is p^m-periodic in a, so the
        coefficients of degree <= nu of a grouplike series are fixed mod p^m
        by its coordinates mod p^m. Outside this range the quotient by
        U(nu, p^m) is larger than p^(m * sigma(nu)), e.g. 32 for
        (n, nu, p, m) = (2, 2, 2, 1) and 256 for (2, 2, 2, 2).
        """
        return self.nu < self.p

    def expected_index(self, n: int) -> int:
        return self.p ** (self.m * sigma(n, self.nu))

    def __str__(self) -> str:
        return f"U({self.nu}, {self.p}^{self.m})"


@dataclass(frozen=True)
class ConvergenceRow:
    step: int
    exponent: int
    agreement: int
    exact: bool = False


@dataclass(frozen=True)
class ConvergenceReport:
    """Agreement of Xi_L^{k_i} with Xi_L^t, measured in p-adic digits"""
    word: Word
    p: int
    precision: int
    rows: Tuple[ConvergenceRow, ...] = field(default_factory=tuple)

    @property
    def agreements(self) -> List[int]:
        return [row.agreement for row in self.rows]

    def is_nondecreasing(self) -> bool:
        values = self.agreements
        return all(a <= b for a, b in zip(values, values[1:]))

    def final_agreement(self) -> Optional[int]:
        return self.rows[-1].agreement if self.rows else None
