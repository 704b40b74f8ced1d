"""
Canonical JSON shapes for coefficients, words, series, tensors and
coordinates. Numbers travel as decimal strings; terms are graded-lex sorted.
"""

import re
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple

from ...domain.entities.coefficients import Coefficient, PAdic, RingKind, RingTag
from ...domain.entities.malcev import MalcevCoordinates, sorted_coefficients
from ...domain.entities.series import Series, SeriesContext
from ...domain.entities.tensor import TensorSeries
from ...domain.entities.words import LyndonOrder, OrderKind, Word
from ...shared.config.constants import Constants
from ...shared.exceptions import ParseError, ProCompletionError

_PADIC_NAME = re.compile(r"^padic\((\d+),(\d+)\)$")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")

K = Constants


# -- rings and scalars ------------------------------------------------------


def encode_ring(ring: RingTag) -> str:
    return ring.name


def decode_ring(value: Any) -> RingTag:
    if value == K.RING_INT:
        return RingTag.integer()
    if value == K.RING_RAT:
        return RingTag.rational()
    match = _PADIC_NAME.match(str(value))
    if match:
        return RingTag.padic(int(match.group(1)), int(match.group(2)))
    raise ParseError(f"Unknown ring: {value!r}", K.KEY_RING)


def encode_coefficient(c: Coefficient) -> Any:
    if isinstance(c, PAdic):
        payload = {
            K.KEY_P: c.p,
            K.KEY_PREC: c.prec,
            K.KEY_VAL: c.val,
            K.KEY_UNIT: str(c.unit),
            K.KEY_DIGITS: c.digits,
        }
        if c.bound is not None:
            payload[K.KEY_BOUND] = c.bound
        return payload
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def parse_rational(text: str) -> Fraction:
    text = str(text).strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"Not an exact rational: {text!r}", K.KEY_COEFF)
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise ParseError(f"Zero denominator in {text!r}", K.KEY_COEFF) from e


def decode_coefficient(value: Any, ring: RingTag) -> Coefficient:
    if isinstance(value, dict):
        if ring.kind is not RingKind.PADIC:
            raise ParseError(f"p-adic scalar in a {ring.name} document", K.KEY_COEFF)
        try:
            c = PAdic(
                int(value[K.KEY_P]),
                int(value[K.KEY_PREC]),
                int(value[K.KEY_VAL]),
                int(value[K.KEY_UNIT]),
                int(value.get(K.KEY_DIGITS, value[K.KEY_PREC])),
                None if value.get(K.KEY_BOUND) is None else int(value[K.KEY_BOUND]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed p-adic scalar: {value!r}", K.KEY_COEFF) from e
        return ring.coerce(c)
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"Coefficients must be exact strings, got {value!r}", K.KEY_COEFF)
    try:
        return ring.coerce(parse_rational(str(value)))
    except ProCompletionError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(e.message, K.KEY_COEFF) from e


# -- words ------------------------------------------------------------------


def encode_word(word: Word) -> List[int]:
    return list(word)


def decode_word(value: Any, n: int) -> Word:
    if not isinstance(value, list) or not all(
        isinstance(a, int) and not isinstance(a, bool) for a in value
    ):
        raise ParseError(f"A word is a list of letters, got {value!r}", K.KEY_WORD)
    if any(not 1 <= a <= n for a in value):
        raise ParseError(f"Letter outside 1..{n} in {value!r}", K.KEY_WORD)
    return tuple(value)


# -- series -----------------------------------------------------------------


def encode_series(g: Series) -> Dict[str, Any]:
    return {
        K.KEY_N: g.context.n,
        K.KEY_MAX_DEGREE: g.max_degree,
        K.KEY_RING: encode_ring(g.ring),
        K.KEY_TERMS: [
            {K.KEY_WORD: encode_word(w), K.KEY_COEFF: encode_coefficient(c)} for w, c in g.terms()
        ],
    }


def _require(payload: Mapping[str, Any], *keys: str) -> None:
    if not isinstance(payload, Mapping):
        raise ParseError(f"Expected a JSON object, got {type(payload).__name__}")
    missing = [k for k in keys if k not in payload]
    if missing:
        raise ParseError(f"Missing field(s): {', '.join(missing)}")


def decode_context(payload: Mapping[str, Any]) -> SeriesContext:
    _require(payload, K.KEY_N, K.KEY_MAX_DEGREE, K.KEY_RING)
    try:
        return SeriesContext(
            int(payload[K.KEY_N]), int(payload[K.KEY_MAX_DEGREE]), decode_ring(payload[K.KEY_RING])
        )
    except ParseError:
        raise
    except (TypeError, ValueError, ProCompletionError) as e:
        raise ParseError(f"Malformed series header: {e}") from e


def decode_series(payload: Mapping[str, Any]) -> Series:
    context = decode_context(payload)
    _require(payload, K.KEY_TERMS)
    terms: Dict[Word, Coefficient] = {}
    for item in payload[K.KEY_TERMS]:
        _require(item, K.KEY_WORD, K.KEY_COEFF)
        word = decode_word(item[K.KEY_WORD], context.n)
        if word in terms:
            raise ParseError(f"Duplicate term {list(word)}", K.KEY_TERMS)
        terms[word] = decode_coefficient(item[K.KEY_COEFF], context.ring)
    return Series(context, terms)


def encode_tensor(t: TensorSeries) -> Dict[str, Any]:
    return {
        K.KEY_N: t.context.n,
        K.KEY_MAX_DEGREE: t.context.max_degree,
        K.KEY_RING: encode_ring(t.ring),
        K.KEY_TERMS: [
            {
                K.KEY_LEFT: encode_word(u),
                K.KEY_RIGHT: encode_word(v),
                K.KEY_COEFF: encode_coefficient(c),
            }
            for (u, v), c in t.terms()
        ],
    }


def decode_tensor(payload: Mapping[str, Any]) -> TensorSeries:
    context = decode_context(payload)
    _require(payload, K.KEY_TERMS)
    terms = {}
    for item in payload[K.KEY_TERMS]:
        _require(item, K.KEY_LEFT, K.KEY_RIGHT, K.KEY_COEFF)
        key = (decode_word(item[K.KEY_LEFT], context.n), decode_word(item[K.KEY_RIGHT], context.n))
        terms[key] = decode_coefficient(item[K.KEY_COEFF], context.ring)
    return TensorSeries(context, terms)


# -- Lyndon coefficients and coordinates ------------------------------------


def encode_lyndon_coefficients(coefficients: Mapping[Word, Coefficient]) -> List[Dict[str, Any]]:
    return [
        {K.KEY_WORD: encode_word(w), K.KEY_COEFF: encode_coefficient(c)}
        for w, c in sorted_coefficients(coefficients)
    ]


def decode_lyndon_coefficients(items: Any, n: int, ring: RingTag) -> Dict[Word, Coefficient]:
    if not isinstance(items, list):
        raise ParseError("Lyndon coefficients are a list of {word, coeff} objects")
    result = {}
    for item in items:
        _require(item, K.KEY_WORD, K.KEY_COEFF)
        result[decode_word(item[K.KEY_WORD], n)] = decode_coefficient(item[K.KEY_COEFF], ring)
    return result


def encode_order(order: LyndonOrder) -> Dict[str, Any]:
    encoded: Dict[str, Any] = {K.KEY_ORDER: order.name}
    if order.kind is OrderKind.CUSTOM:
        encoded[K.KEY_RANKING] = [encode_word(w) for w in order.ranking]
    return encoded


def decode_order(payload: Mapping[str, Any], n: int) -> LyndonOrder:
    name = payload.get(K.KEY_ORDER, K.ORDER_GRADED)
    if name == K.ORDER_GRADED:
        return LyndonOrder.graded()
    if name == K.ORDER_LEX:
        return LyndonOrder.lex()
    if name == K.ORDER_CUSTOM:
        ranking = payload.get(K.KEY_RANKING)
        if not isinstance(ranking, list):
            raise ParseError("A custom order needs a ranking list", K.KEY_RANKING)
        return LyndonOrder.from_ranking([decode_word(w, n) for w in ranking])
    raise ParseError(f"Unknown order: {name!r}", K.KEY_ORDER)


def encode_malcev(t: MalcevCoordinates, n: int, max_degree: int) -> Dict[str, Any]:
    encoded = {
        K.KEY_N: n,
        K.KEY_MAX_DEGREE: max_degree,
        K.KEY_RING: encode_ring(t.ring),
        K.KEY_ENTRIES: [
            {K.KEY_WORD: encode_word(w), K.KEY_T: encode_coefficient(c)} for w, c in t
        ],
    }
    encoded.update(encode_order(t.order))
    return encoded


def decode_malcev(payload: Mapping[str, Any]) -> Tuple[SeriesContext, MalcevCoordinates]:
    context = decode_context(payload)
    _require(payload, K.KEY_ENTRIES)
    order = decode_order(payload, context.n)
    entries = {}
    for item in payload[K.KEY_ENTRIES]:
        _require(item, K.KEY_WORD, K.KEY_T)
        entries[decode_word(item[K.KEY_WORD], context.n)] = decode_coefficient(item[K.KEY_T], context.ring)
    try:
        return context, MalcevCoordinates.from_mapping(context.ring, order, entries)
    except ProCompletionError as e:
        raise ParseError(e.message, K.KEY_ENTRIES) from e
