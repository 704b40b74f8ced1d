"""
Open subgroups U(nu, p^m) of the Z_p-integral group, quotient orders,
coset coordinates and p-adic convergence of integer powers.
"""

from collections import deque
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import structlog

from ...shared.exceptions import (
    CoefficientDomainError,
    InconsistencyError,
    PrecisionError,
    PreconditionError,
    RingMismatchError,
    TruncationError,
)
from ..entities.coefficients import Coefficient, PAdic, RingKind, RingTag, padic_valuation
from ..entities.group_word import GroupWord
from ..entities.malcev import MalcevCoordinates
from ..entities.series import Series, SeriesContext
from ..entities.subgroup import ConvergenceReport, ConvergenceRow, OpenSubgroupSpec
from ..entities.words import LyndonOrder, Word, lyndon_words
from .group import malcev_decompose, magnus_embed
from .lie import Xi

logger = structlog.get_logger(__name__)

CosetKey = Tuple[int, ...]


def recommended_precision(spec: OpenSubgroupSpec, max_degree: int, margin: int = 2) -> int:
    """m + ceil(log_p N!) + margin p-adic digits"""
    factorial = 1
    for k in range(2, max_degree + 1):
        factorial *= k
    digits = 0
    while spec.p ** digits < factorial:
        digits += 1
    return spec.m + digits + margin


def is_finer(finer: OpenSubgroupSpec, coarser: OpenSubgroupSpec) -> bool:
    """U(nu', p^m') is contained in U(nu, p^m) when nu' >= nu and m' >= m"""
    return finer.p == coarser.p and finer.nu >= coarser.nu and finer.m >= coarser.m


def _check_padic(g: Series, spec: OpenSubgroupSpec) -> None:
    ring = g.ring
    if ring.kind is not RingKind.PADIC:
        raise CoefficientDomainError("Open subgroup tests need p-adic coefficients", ring.name)
    if ring.p != spec.p:
        raise RingMismatchError(ring.name, f"padic({spec.p},*)")
    if ring.prec < spec.m:
        raise PrecisionError(spec.m, ring.prec, spec.p)
    if spec.nu > g.max_degree:
        raise TruncationError(spec.nu, g.max_degree)
    recommended = recommended_precision(spec, g.max_degree, margin=0)
    if ring.prec < recommended:
        logger.warning(
            "padic_precision_below_recommended",
            precision=ring.prec,
            recommended=recommended,
        )


def in_open_subgroup(g: Series, spec: OpenSubgroupSpec) -> bool:
    """Every c_alpha with 1 <= |alpha| <= nu is divisible by p^m"""
    _check_padic(g, spec)
    for word, coeff in g.terms():
        if 1 <= len(word) <= spec.nu and coeff.reduce(spec.m) != 0:
            return False
    return True


def _valuation(c: Coefficient, p: int):
    # None stands for +infinity
    if isinstance(c, PAdic):
        return None if c.is_zero() else c.val
    if c == 0:
        return None
    numerator, denominator = (c, 1) if isinstance(c, int) else (c.numerator, c.denominator)
    return padic_valuation(numerator, p) - padic_valuation(denominator, p)


def in_open_subgroup_by_coordinates(t: MalcevCoordinates, spec: OpenSubgroupSpec) -> bool:
    """t_L in p^m Z_p for |L| <= nu and t_L in Z_p otherwise"""
    for word, coeff in t:
        required = spec.m if len(word) <= spec.nu else 0
        if isinstance(coeff, PAdic) and coeff.is_zero() and coeff.bound is not None \
                and coeff.bound < required:
            raise PrecisionError(required, coeff.bound, spec.p)
        v = _valuation(coeff, spec.p)
        if v is None:
            continue
        if v < required:
            return False
    return True


def coset_coordinates(
    g: Series, spec: OpenSubgroupSpec, order: Optional[LyndonOrder] = None
) -> Dict[Word, int]:
    """Malcev coordinates t_L, |L| <= nu, reduced modulo p^m"""
    if g.ring.kind is RingKind.PADIC:
        _check_padic(g, spec)
    elif spec.nu > g.max_degree:
        raise TruncationError(spec.nu, g.max_degree)
    coordinates = malcev_decompose(g.restrict(spec.nu), order)
    residues = {}
    for word, t in coordinates:
        residues[word] = _reduce(t, spec)
    return residues


def _reduce(c: Coefficient, spec: OpenSubgroupSpec) -> int:
    if isinstance(c, PAdic):
        return c.reduce(spec.m)
    if isinstance(c, int):
        return c % spec.modulus
    if c.denominator % spec.p == 0:
        raise CoefficientDomainError(f"{c} is not a {spec.p}-adic integer")
    return (c.numerator * pow(c.denominator, -1, spec.modulus)) % spec.modulus


def order_mod_subgroup(g: Series, spec: OpenSubgroupSpec, limit: int = 64) -> int:
    """Smallest p^e with g^(p^e) in U(nu, p^m)"""
    _check_padic(g, spec)
    h = g.restrict(spec.nu)
    words = sum(g.context.n ** k for k in range(1, spec.nu + 1))
    guard = min(spec.m * words, limit)
    for e in range(guard + 1):
        if in_open_subgroup(h, spec):
            logger.debug("order_mod_subgroup", exponent=e, spec=str(spec))
            return spec.p ** e
        h = h.power(spec.p)
    raise InconsistencyError("Order search exceeded its guard", spec=spec, guard=guard)


def integer_power_limit(
    context: SeriesContext, word: Word, t: PAdic, approximations: Sequence[int]
) -> ConvergenceReport:
    """
    For each k_i (with k_i = t mod p^i) the number of p-adic digits to
    which Xi_L^{k_i} agrees with Xi_L^t in every degree <= N.
    """
    ring = context.ring
    if ring.kind is not RingKind.PADIC:
        raise CoefficientDomainError("Convergence reports need p-adic coefficients", ring.name)
    t = ring.coerce(t)
    if not t.is_integral():
        raise CoefficientDomainError(f"{t} is not a {ring.p}-adic integer", ring.name)

    base = Xi(context, word)
    target = base.power(t)
    rows: List[ConvergenceRow] = []
    for i, k in enumerate(approximations, start=1):
        gap = ring.coerce(k) - t
        if gap.is_zero() and gap.bound is not None and gap.bound < min(i, ring.prec):
            raise PrecisionError(min(i, ring.prec), gap.bound, ring.p)
        if not gap.is_zero() and gap.val < min(i, ring.prec):
            raise PreconditionError(
                f"Approximation {k} does not agree with t modulo {ring.p}^{i}", "integer_power_limit"
            )
        difference = base.power(k) - target
        # a zero O(p^j) agrees to j digits; a nonzero coefficient to its valuation
        levels = [c.bound if c.is_zero() else c.val for _, c in difference.terms()]
        agreement = min(min(levels, default=ring.prec), ring.prec)
        rows.append(ConvergenceRow(i, k, agreement, exact=difference.is_zero()))
        logger.debug("integer_power_limit.step", step=i, exponent=k, agreement=agreement)
    return ConvergenceReport(tuple(word), ring.p, ring.prec, tuple(rows))


# -- finite quotients --------------------------------------------------------


def _coefficient_key(g: Series, spec: OpenSubgroupSpec, words: List[Word]) -> CosetKey:
    modulus = spec.modulus
    return tuple(g.coefficient(w) % modulus for w in words)


def _all_words(n: int, nu: int) -> List[Word]:
    return [w for k in range(1, nu + 1) for w in product(range(1, n + 1), repeat=k)]


def _quotient_representatives(n: int, spec: OpenSubgroupSpec, limit: int) -> Dict[CosetKey, Series]:
    # breadth-first closure of the generators on integer series truncated at nu;
    # two integral grouplike series share a U-coset iff their keys agree
    context = SeriesContext(n, spec.nu, RingTag.integer())
    words = _all_words(n, spec.nu)
    generators = [magnus_embed(context, GroupWord(((j, e),))) for j in range(1, n + 1) for e in (1, -1)]
    identity = Series.one(context)
    seen: Dict[CosetKey, Series] = {_coefficient_key(identity, spec, words): identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = g * s
            key = _coefficient_key(h, spec, words)
            if key not in seen:
                seen[key] = h
                queue.append(h)
                if len(seen) > limit:
                    raise InconsistencyError("Quotient exceeds its size bound", spec=spec, bound=limit)
    return seen


def _quotient_bound(n: int, spec: OpenSubgroupSpec) -> int:
    return spec.modulus ** len(_all_words(n, spec.nu))


def quotient_order(n: int, spec: OpenSubgroupSpec) -> int:
    """|G / U(nu, p^m)|, found without Malcev coordinates"""
    order = len(_quotient_representatives(n, spec, _quotient_bound(n, spec)))
    logger.info(
        "quotient_order",
        spec=str(spec),
        order=order,
        expected=spec.expected_index(n),
        index_hypothesis=spec.index_hypothesis,
        binomials_periodic=spec.binomials_periodic,
    )
    return order


def enumerate_coordinate_cosets(
    n: int, spec: OpenSubgroupSpec, order: Optional[LyndonOrder] = None
) -> FrozenSet[CosetKey]:
    """Distinct tuples (t_L mod p^m), |L| <= nu, over the whole quotient"""
    order = order or LyndonOrder.graded()
    words = lyndon_words(n, spec.nu, order)
    tuples = set()
    for representative in _quotient_representatives(n, spec, _quotient_bound(n, spec)).values():
        residues = coset_coordinates(representative, spec, order)
        tuples.add(tuple(residues[w] for w in words))
    logger.info("enumerate_coordinate_cosets", spec=str(spec), cosets=len(tuples))
    return frozenset(tuples)
