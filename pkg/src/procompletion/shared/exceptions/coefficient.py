from typing import Optional
from .base import ProCompletionError


class CoefficientError(ProCompletionError):
    """Exception raised for coefficient arithmetic failures"""


class RingMismatchError(CoefficientError):
    """Exception raised when operands live in different coefficient rings"""

    def __init__(self, left: str, right: str):
        super().__init__(f"Ring mismatch: {left} vs {right}", "RING_MISMATCH")
        self.details["left"] = left
        self.details["right"] = right


class DivisionByZeroError(CoefficientError):
    """Exception raised when inverting zero"""

    def __init__(self, ring: str):
        super().__init__(f"Division by zero in {ring}", "DIVISION_BY_ZERO")
        self.details["ring"] = ring


class CoefficientDomainError(CoefficientError):
    """Exception raised when a value does not belong to the requested ring"""

    def __init__(self, message: str, ring: Optional[str] = None):
        super().__init__(message, "COEFFICIENT_DOMAIN")
        if ring:
            self.details["ring"] = ring
