"""
Lyndon basis of the free Lie algebra inside the truncated series algebra.
"""

from functools import lru_cache
from typing import List, Mapping, Tuple

import structlog

from ...shared.exceptions import (
    CoefficientDomainError,
    InconsistencyError,
    PreconditionError,
    TruncationError,
    WordError,
)
from ..entities.malcev import LyndonBasisCoefficients
from ..entities.series import Series, SeriesContext, group_commutator, lie_bracket
from ..entities.words import (
    Leaf,
    ParenTree,
    Word,
    is_lyndon,
    lyndon_words_of_degree,
    parenthesize,
)
from .coproduct import is_primitive

logger = structlog.get_logger(__name__)


def _check_lyndon(context: SeriesContext, word: Word) -> Word:
    word = tuple(word)
    if not word or not is_lyndon(word):
        raise WordError("Expected a Lyndon word", word)
    if len(word) > context.max_degree:
        raise TruncationError(len(word), context.max_degree)
    return word


def _evaluate(tree: ParenTree, context: SeriesContext, leaf, node) -> Series:
    if isinstance(tree, Leaf):
        return leaf(tree.letter)
    return node(_evaluate(tree.left, context, leaf, node), _evaluate(tree.right, context, leaf, node))


@lru_cache(maxsize=None)
def _xi(context: SeriesContext, word: Word) -> Series:
    return _evaluate(
        parenthesize(word), context, lambda j: Series.generator(context, j), lie_bracket
    )


@lru_cache(maxsize=None)
def _group_xi(context: SeriesContext, word: Word) -> Series:
    one = Series.one(context)
    return _evaluate(
        parenthesize(word), context, lambda j: one + Series.generator(context, j), group_commutator
    )


def xi(context: SeriesContext, word: Word) -> Series:
    """The Lie element read off the bracketing of a Lyndon word"""
    return _xi(context, _check_lyndon(context, word))


def Xi(context: SeriesContext, word: Word) -> Series:  # noqa: N802
    """The group commutator read off the bracketing, at g_j = 1 + omega_j"""
    return _group_xi(context, _check_lyndon(context, word))


def lyndon_basis(context: SeriesContext, degree: int) -> List[Tuple[Word, Series]]:
    """All xi_L with |L| = degree, lexicographically ordered"""
    if degree < 1 or degree > context.max_degree:
        raise TruncationError(degree, context.max_degree)
    return [(word, _xi(context, word)) for word in lyndon_words_of_degree(context.n, degree)]


def compose_lie(context: SeriesContext, coefficients: Mapping[Word, object]) -> Series:
    """sum of t_L xi_L"""
    result = Series.zero(context)
    for word, t in coefficients.items():
        result = result + xi(context, word).scalar_mul(t)
    return result


def decompose_lie(z: Series, check: bool = True) -> LyndonBasisCoefficients:
    """
    Coefficients t_L with z = sum t_L xi_L.

    Each xi_L is omega^L plus lexicographically larger monomials of the same
    degree, so t_L is read off at omega^L after subtracting the earlier terms.
    """
    ring = z.ring
    if not ring.is_zero(z.constant_term()):
        raise PreconditionError("Lie decomposition needs zero constant term", "decompose_lie")
    if check and not is_primitive(z):
        raise PreconditionError("Input is not a Lie element", "decompose_lie")

    coefficients: LyndonBasisCoefficients = {}
    for degree in range(1, z.max_degree + 1):
        residual = z.homogeneous_component(degree)
        if residual.is_zero():
            continue
        for word in lyndon_words_of_degree(z.context.n, degree):
            t = residual.coefficient(word)
            if ring.is_exact_zero(t):
                continue
            coefficients[word] = t
            residual = residual - _xi(z.context, word).scalar_mul(t)
        if not residual.is_zero():
            raise InconsistencyError(
                "Nonzero remainder after Lyndon decomposition",
                degree=degree,
                remainder=residual,
            )
        logger.debug("decompose_lie.degree", degree=degree, terms=len(coefficients))
    return coefficients


def bch(u: Series, v: Series) -> Series:
    """z with exp(u) exp(v) = exp(z), computed as ln(exp(u) exp(v))"""
    if not u.ring.contains_rationals:
        raise CoefficientDomainError("bch needs a ring containing Q", u.ring.name)
    for name, x in (("u", u), ("v", v)):
        if not is_primitive(x):
            raise PreconditionError(f"bch argument {name} is not primitive", "bch")
    return (u.exp() * v.exp()).ln()
