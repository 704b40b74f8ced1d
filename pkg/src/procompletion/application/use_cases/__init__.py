from .check_use_case import CheckOutcome, CheckUseCase
from .lyndon_use_case import LyndonUseCase
from .malcev_use_case import MalcevUseCase
from .padic_use_case import PadicUseCase, QuotientSummary
from .series_use_case import SeriesUseCase

__all__ = [
    'CheckOutcome',
    'CheckUseCase',
    'LyndonUseCase',
    'MalcevUseCase',
    'PadicUseCase',
    'QuotientSummary',
    'SeriesUseCase'
]
