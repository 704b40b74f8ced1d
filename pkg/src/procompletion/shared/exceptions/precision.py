from .base import ProCompletionError


class PrecisionError(ProCompletionError):
    """Exception raised when p-adic precision is insufficient for a decision"""

    def __init__(self, required: int, available: int, p: int):
        super().__init__(
            f"Insufficient {p}-adic precision: need {required} digits, have {available}",
            "PRECISION_ERROR"
        )
        self.required = required
        self.available = available
        self.details["required"] = required
        self.details["available"] = available
        self.details["p"] = p
