"""
Exceptions raised by the procompletion library
"""

from .base import ProCompletionError
from .validation import ValidationError, ParseError
from .coefficient import (
    CoefficientError,
    RingMismatchError,
    DivisionByZeroError,
    CoefficientDomainError,
)
from .algebra import (
    WordError,
    ContextMismatchError,
    TruncationError,
    PreconditionError,
    InconsistencyError,
)
from .precision import PrecisionError
from .repository import RepositoryError

__all__ = [
    'ProCompletionError',
    'ValidationError',
    'ParseError',
    'CoefficientError',
    'RingMismatchError',
    'DivisionByZeroError',
    'CoefficientDomainError',
    'WordError',
    'ContextMismatchError',
    'TruncationError',
    'PreconditionError',
    'InconsistencyError',
    'PrecisionError',
    'RepositoryError'
]
