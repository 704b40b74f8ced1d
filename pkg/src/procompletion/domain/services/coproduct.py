"""
The standard coproduct (unshuffles), the twisted coproduct (tri-colorings),
the substitution omega_j -> ln(1 + omega_j) relating them, and the
primitive / grouplike tests.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import structlog

from ...shared.config.constants import Coproduct
from ...shared.exceptions import CoefficientDomainError, PreconditionError
from ..entities.coefficients import Coefficient
from ..entities.series import Series, SeriesContext
from ..entities.tensor import TensorSeries, WordPair
from ..entities.words import Word, graded_key

logger = structlog.get_logger(__name__)


# -- per-monomial expansions -------------------------------------------------


@lru_cache(maxsize=None)
def unshuffles(word: Word) -> Dict[WordPair, int]:
    """Delta(omega^word): every split of the letters into two subwords"""
    result: Counter = Counter()
    for mask in range(1 << len(word)):
        left = tuple(a for i, a in enumerate(word) if mask >> i & 1)
        right = tuple(a for i, a in enumerate(word) if not mask >> i & 1)
        result[(left, right)] += 1
    return dict(result)


# colors: green -> right factor only, red -> left factor only, white -> both
_GREEN, _RED, _WHITE = 0, 1, 2


@lru_cache(maxsize=None)
def tricolorings(word: Word) -> Dict[WordPair, int]:
    """delta(omega^word): every coloring of the letters green, red or white"""
    result: Counter = Counter()
    for colors in product((_GREEN, _RED, _WHITE), repeat=len(word)):
        left = tuple(a for a, c in zip(word, colors) if c != _GREEN)
        right = tuple(a for a, c in zip(word, colors) if c != _RED)
        result[(left, right)] += 1
    return dict(result)


def _expand(g: Series, expansion: Callable[[Word], Dict[WordPair, int]]) -> TensorSeries:
    limit = g.max_degree
    terms: Dict[WordPair, Coefficient] = {}
    for word, coeff in g.terms():
        for (left, right), count in expansion(word).items():
            if len(left) + len(right) > limit:
                continue
            key = (left, right)
            value = coeff * count
            terms[key] = terms[key] + value if key in terms else value
    return TensorSeries._trusted(g.context, terms)


def delta_std(g: Series) -> TensorSeries:
    """Delta(g), truncated at total degree N"""
    return _expand(g, unshuffles)


def delta_twisted(g: Series) -> TensorSeries:
    """delta(g), truncated at total degree N"""
    return _expand(g, tricolorings)


def coproduct(g: Series, which: Coproduct) -> TensorSeries:
    return delta_std(g) if which is Coproduct.STANDARD else delta_twisted(g)


# -- product expansions ------------------------------------------------------


@lru_cache(maxsize=None)
def quasi_shuffle_targets(alpha: Word, beta: Word) -> Dict[Word, int]:
    """
    Words tau with multiplicity: the number of tri-colorings of tau whose
    red-and-white letters spell alpha and green-and-white letters spell beta.
    """
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    a, rest_a = alpha[0], alpha[1:]
    b, rest_b = beta[0], beta[1:]
    result: Counter = Counter()
    for tau, count in quasi_shuffle_targets(rest_a, beta).items():
        result[(a,) + tau] += count
    for tau, count in quasi_shuffle_targets(alpha, rest_b).items():
        result[(b,) + tau] += count
    if a == b:
        for tau, count in quasi_shuffle_targets(rest_a, rest_b).items():
            result[(a,) + tau] += count
    return dict(result)


@lru_cache(maxsize=None)
def shuffle_targets(alpha: Word, beta: Word) -> Dict[Word, int]:
    """Shuffles of alpha and beta with multiplicity"""
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    result: Counter = Counter()
    for tau, count in shuffle_targets(alpha[1:], beta).items():
        result[(alpha[0],) + tau] += count
    for tau, count in shuffle_targets(alpha, beta[1:]).items():
        result[(beta[0],) + tau] += count
    return dict(result)


def twisted_power_coefficient(m: int, a: int, b: int) -> int:
    """Coefficient of omega_j^a (x) omega_j^b in delta(omega_j^m)"""
    if a > m or b > m or a + b < m or min(a, b, m) < 0:
        return 0
    return factorial(m) // (factorial(m - a) * factorial(m - b) * factorial(a + b - m))


# -- membership tests --------------------------------------------------------


def is_primitive(z: Series) -> bool:
    """Delta(z) == z (x) 1 + 1 (x) z within the truncation"""
    if not z.ring.is_zero(z.constant_term()):
        raise PreconditionError("Primitive test needs zero constant term", "is_primitive")
    return delta_std(z) == TensorSeries.primitive_image(z)


@dataclass(frozen=True)
class GrouplikeViolation:
    """c_alpha * c_beta != sum of c_tau over the product expansion of (alpha, beta)"""
    alpha: Word
    beta: Word
    lhs: Coefficient
    rhs: Coefficient


def _pairs(context: SeriesContext) -> Iterator[Tuple[Word, Word]]:
    # graded-lex order on alpha, then on beta, grouped by total degree
    n, limit = context.n, context.max_degree
    for total in range(2, limit + 1):
        for left_degree in range(1, total):
            right_degree = total - left_degree
            for alpha in product(range(1, n + 1), repeat=left_degree):
                for beta in product(range(1, n + 1), repeat=right_degree):
                    yield alpha, beta


def _require_unit_constant(g: Series, operation: str) -> None:
    if not g.has_unit_constant():
        raise PreconditionError(f"{operation} needs constant term 1", operation)


def grouplike_violation(g: Series, which: Coproduct = Coproduct.TWISTED) -> Optional[GrouplikeViolation]:
    """First violated quadratic equation, or None when g is grouplike"""
    _require_unit_constant(g, "is_grouplike")
    targets = quasi_shuffle_targets if which is Coproduct.TWISTED else shuffle_targets
    ring = g.ring
    for alpha, beta in _pairs(g.context):
        lhs = g.coefficient(alpha) * g.coefficient(beta)
        rhs = ring.zero()
        for tau, count in targets(alpha, beta).items():
            coeff = g.coefficient(tau)
            if not ring.is_zero(coeff):
                rhs = rhs + coeff * count
        if not ring.is_zero(lhs - rhs):
            logger.debug("grouplike_violation", alpha=alpha, beta=beta, coproduct=which.value)
            return GrouplikeViolation(alpha, beta, lhs, rhs)
    return None


def is_grouplike(g: Series, which: Coproduct = Coproduct.TWISTED) -> bool:
    return grouplike_violation(g, which) is None


# -- the substitution gamma --------------------------------------------------


def _require_rationals(g: Series, operation: str) -> None:
    if not g.ring.contains_rationals:
        raise CoefficientDomainError(f"{operation} needs a ring containing Q", g.ring.name)


def _generator_images(context: SeriesContext, image: Callable[[Series], Series]) -> Dict[int, Series]:
    return {j: image(Series.generator(context, j)) for j in range(1, context.n + 1)}


def gamma(g: Series) -> Series:
    """Substitute omega_j -> ln(1 + omega_j)"""
    _require_rationals(g, "gamma")
    one = Series.one(g.context)
    return g.substitute(_generator_images(g.context, lambda w: (one + w).ln()))


def gamma_inv(g: Series) -> Series:
    """Substitute omega_j -> exp(omega_j) - 1"""
    _require_rationals(g, "gamma_inv")
    one = Series.one(g.context)
    return g.substitute(_generator_images(g.context, lambda w: w.exp() - one))


def map_tensor(t: TensorSeries, f: Callable[[Series], Series]) -> TensorSeries:
    """(f (x) f)(t) for a degree-nondecreasing algebra map f"""
    context = t.context
    images: Dict[Word, Series] = {}

    def image(word: Word) -> Series:
        if word not in images:
            images[word] = f(Series.monomial(context, word))
        return images[word]

    result = TensorSeries.zero(context)
    for (left, right), coeff in t.terms():
        result = result + TensorSeries.outer(image(left), image(right)).scalar_mul(coeff)
    return result


def brute_force_quasi_shuffle(alpha: Word, beta: Word) -> Dict[Word, int]:
    """quasi_shuffle_targets by enumerating tri-colorings of every candidate tau"""
    found: Counter = Counter()
    letters = sorted(set(alpha) | set(beta)) or [1]
    upper = len(alpha) + len(beta)
    lower = max(len(alpha), len(beta))
    for length in range(lower, upper + 1):
        for tau in product(letters, repeat=length):
            count = tricolorings(tau).get((alpha, beta), 0)
            if count:
                found[tau] = count
    return dict(found)


def sorted_targets(targets: Dict[Word, int]) -> List[Tuple[Word, int]]:
    return sorted(targets.items(), key=lambda item: graded_key(item[0]))
