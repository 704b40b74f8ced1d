from typing import Optional, Any, Sequence
from .base import ProCompletionError


class WordError(ProCompletionError):
    """Exception raised for words outside the alphabet or of the wrong kind"""

    def __init__(self, message: str, word: Optional[Sequence[int]] = None):
        super().__init__(message, "WORD_ERROR")
        if word is not None:
            self.details["word"] = list(word)


class ContextMismatchError(ProCompletionError):
    """Exception raised when series with different (n, N, ring) are combined"""

    def __init__(self, left: Any, right: Any):
        super().__init__(f"Series context mismatch: {left} vs {right}", "CONTEXT_MISMATCH")
        self.details["left"] = str(left)
        self.details["right"] = str(right)


class TruncationError(ProCompletionError):
    """Exception raised when a degree exceeds the truncation degree"""

    def __init__(self, degree: int, max_degree: int):
        super().__init__(
            f"Degree {degree} exceeds truncation degree {max_degree}",
            "TRUNCATION_ERROR"
        )
        self.details["degree"] = degree
        self.details["max_degree"] = max_degree


class PreconditionError(ProCompletionError):
    """Exception raised when an operation's precondition does not hold"""

    def __init__(self, message: str, operation: Optional[str] = None):
        super().__init__(message, "PRECONDITION_FAILED")
        if operation:
            self.details["operation"] = operation


class InconsistencyError(ProCompletionError):
    """Exception raised when a runtime-checked mathematical obligation fails"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message, "INCONSISTENCY")
        self.details.update({key: str(value) for key, value in details.items()})
