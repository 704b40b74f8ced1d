from .coefficients import Coefficient, PAdic, RingKind, RingTag
from .group_word import GroupWord, parse_group_word
from .malcev import LyndonBasisCoefficients, MalcevCoordinates
from .series import Series, SeriesContext
from .subgroup import ConvergenceReport, ConvergenceRow, OpenSubgroupSpec
from .tensor import TensorSeries
from .words import LyndonOrder, Word

__all__ = [
    'Coefficient',
    'PAdic',
    'RingKind',
    'RingTag',
    'GroupWord',
    'parse_group_word',
    'LyndonBasisCoefficients',
    'MalcevCoordinates',
    'Series',
    'SeriesContext',
    'ConvergenceReport',
    'ConvergenceRow',
    'OpenSubgroupSpec',
    'TensorSeries',
    'LyndonOrder',
    'Word'
]
