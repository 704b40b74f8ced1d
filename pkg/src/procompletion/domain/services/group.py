"""
The group of delta-grouplike series, the Magnus embedding of F_n and
Malcev coordinates with respect to an arbitrary order on Lyndon words.
"""

from typing import Dict, List, Mapping, Optional, Tuple

import structlog

from ...shared.config.constants import Coproduct
from ...shared.exceptions import InconsistencyError, PreconditionError, TruncationError, WordError
from ..entities.coefficients import Coefficient
from ..entities.group_word import GroupWord
from ..entities.malcev import MalcevCoordinates
from ..entities.series import Series, SeriesContext
from ..entities.words import LyndonOrder, Word, is_lyndon, lyndon_words, lyndon_words_of_degree
from .coproduct import is_grouplike, is_primitive
from .lie import Xi, decompose_lie, xi

logger = structlog.get_logger(__name__)


def magnus_embed(context: SeriesContext, word: GroupWord) -> Series:
    """Image of a free-group word under g_j -> 1 + omega_j"""
    if word.max_generator() > context.n:
        raise WordError(f"Generator {word.max_generator()} outside 1..{context.n}")
    one = Series.one(context)
    result = one
    for j, e in word:
        result = result * signed_power(one + Series.generator(context, j), e)
    return result


def signed_power(g: Series, t: Coefficient) -> Series:
    """g^t, with a negative integer t taken as (g^-1)^|t|"""
    if isinstance(t, int) and t < 0:
        return g.inverse().power(-t)
    return g.power(t)


def is_in_group(g: Series) -> bool:
    """delta(g) == g (x) g, checked through the quasi-shuffle equations"""
    if not g.has_unit_constant():
        return False
    return is_grouplike(g, Coproduct.TWISTED)


def is_integral(g: Series) -> bool:
    return g.is_integral()


def is_in_closure(g: Series) -> bool:
    """Integral and grouplike: the closure of F_n at this truncation"""
    return is_in_group(g) and is_integral(g)


def _ordered_words(context: SeriesContext, order: LyndonOrder) -> List[Word]:
    return lyndon_words(context.n, context.max_degree, order)


def _ordered_product(
    context: SeriesContext, words: List[Word], exponents: Mapping[Word, Coefficient], below: int
) -> Series:
    # product of Xi_L^{t_L} over words of degree < below, in list order
    ring = context.ring
    result = Series.one(context)
    for word in words:
        if len(word) >= below:
            continue
        t = exponents.get(word)
        if t is None or ring.is_exact_zero(t):
            continue
        result = result * signed_power(Xi(context, word), t)
    return result


def malcev_decompose(g: Series, order: Optional[LyndonOrder] = None) -> MalcevCoordinates:
    """
    Exponents t_L with g = prod Xi_L^{t_L}, factors taken in `order`.

    Works one degree at a time: once the factors of degree < m are known,
    the degree-m part of P^-1 g is a Lie element whose Lyndon coefficients
    are the degree-m exponents.
    """
    order = order or LyndonOrder.graded()
    if not is_in_group(g):
        raise PreconditionError("Series is not grouplike", "malcev_decompose")

    full = g.context
    words = _ordered_words(full, order)
    ring = full.ring
    exponents: Dict[Word, Coefficient] = {}

    for m in range(1, full.max_degree + 1):
        context = full.with_max_degree(m)
        partial = _ordered_product(context, words, exponents, below=m)
        quotient = partial.inverse() * g.restrict(m)
        for k in range(1, m):
            if not quotient.homogeneous_component(k).is_zero():
                raise InconsistencyError(
                    "Lower-degree residual survived", degree=m, residual_degree=k
                )
        residual = quotient.homogeneous_component(m)
        if not is_primitive(residual):
            raise InconsistencyError("Residual is not a Lie element", degree=m, residual=residual)
        for word, t in decompose_lie(residual, check=False).items():
            exponents[word] = t
        logger.debug("malcev_decompose.degree", degree=m, residual_terms=len(residual))

    entries = tuple((w, exponents.get(w, ring.zero())) for w in words)
    return MalcevCoordinates(ring, order, entries)


def _exponents_for(context: SeriesContext, coordinates: MalcevCoordinates) -> Dict[Word, Coefficient]:
    exponents = {}
    for word, t in coordinates:
        if len(word) > context.max_degree:
            if not context.ring.is_zero(t):
                raise TruncationError(len(word), context.max_degree)
            continue
        exponents[word] = context.ring.coerce(t)
    return exponents


def malcev_compose(
    context: SeriesContext, coordinates: MalcevCoordinates, order: Optional[LyndonOrder] = None
) -> Series:
    """The ordered product of Xi_L^{t_L}, truncated at N"""
    order = order or coordinates.order
    words = _ordered_words(context, order)
    exponents = _exponents_for(context, coordinates)
    return _ordered_product(context, words, exponents, below=context.max_degree + 1)


def lyndon_coefficients(g: Series) -> Dict[Word, Coefficient]:
    """c_L for every Lyndon word of length <= N"""
    return {w: g.coefficient(w) for w in lyndon_words(g.context.n, g.max_degree)}


def reconstruct_from_lyndon_coeffs(
    context: SeriesContext,
    prescribed: Mapping[Word, object],
    order: Optional[LyndonOrder] = None,
) -> Tuple[Series, MalcevCoordinates]:
    """
    The grouplike series whose Lyndon coefficients are `prescribed`.

    For |L| = m the coefficient of omega^L in the product is its value in
    the product P of the lower-degree factors plus sum t_K coeff(xi_K, L)
    over degree-m words K <= L, so t_L is found by forward substitution.
    """
    order = order or LyndonOrder.graded()
    ring = context.ring
    for word in prescribed:
        if not word or not is_lyndon(tuple(word)):
            raise WordError("Prescribed coefficients must be indexed by Lyndon words", word)
    targets = {tuple(w): ring.coerce(a) for w, a in prescribed.items()}
    for word, a in targets.items():
        if len(word) > context.max_degree and not ring.is_zero(a):
            raise TruncationError(len(word), context.max_degree)
    words = _ordered_words(context, order)
    exponents: Dict[Word, Coefficient] = {}

    for m in range(1, context.max_degree + 1):
        partial = _ordered_product(context.with_max_degree(m), words, exponents, below=m)
        solved: List[Word] = []
        for word in lyndon_words_of_degree(context.n, m):
            t = targets.get(word, ring.zero()) - partial.coefficient(word)
            for earlier in solved:
                t = t - exponents[earlier] * xi(context, earlier).coefficient(word)
            exponents[word] = t
            solved.append(word)
        logger.debug("reconstruct.degree", degree=m, solved=len(solved))

    coordinates = MalcevCoordinates(ring, order, tuple((w, exponents[w]) for w in words))
    return malcev_compose(context, coordinates), coordinates
