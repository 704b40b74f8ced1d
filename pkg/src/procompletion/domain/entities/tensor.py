from typing import Dict, List, Mapping, Optional, Tuple

from ...shared.exceptions import ContextMismatchError
from .coefficients import Coefficient
from .series import Series, SeriesContext
from .words import EMPTY_WORD, Word, graded_key, validate_word

WordPair = Tuple[Word, Word]


class TensorSeries:
    """
    Sparse map (Word, Word) -> Coefficient in Afr_n (x) Afr_n.

    Terms whose total degree exceeds context.max_degree are dropped.
    """

    __slots__ = ("context", "_terms")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, context: SeriesContext, terms: Optional[Mapping[WordPair, object]] = None):
        ring = context.ring
        clean: Dict[WordPair, Coefficient] = {}
        for (left, right), coeff in (terms or {}).items():
            left = validate_word(left, context.n)
            right = validate_word(right, context.n)
            if len(left) + len(right) > context.max_degree:
                continue
            value = ring.coerce(coeff)
            if not ring.is_zero(value):
                clean[(left, right)] = value
        self.context = context
        self._terms = clean

    @classmethod
    def _trusted(cls, context: SeriesContext, terms: Dict[WordPair, Coefficient]) -> "TensorSeries":
        obj = cls.__new__(cls)
        obj.context = context
        is_zero = context.ring.is_zero
        obj._terms = {k: c for k, c in terms.items() if not is_zero(c)}
        return obj

    @classmethod
    def zero(cls, context: SeriesContext) -> "TensorSeries":
        return cls._trusted(context, {})

    @classmethod
    def outer(cls, left: Series, right: Series) -> "TensorSeries":
        """left (x) right, truncated at total degree"""
        if left.context != right.context:
            raise ContextMismatchError(left.context, right.context)
        limit = left.max_degree
        result: Dict[WordPair, Coefficient] = {}
        for u, a in left.terms():
            for v, b in right.terms():
                if len(u) + len(v) <= limit:
                    result[(u, v)] = a * b
        return cls._trusted(left.context, result)

    @classmethod
    def primitive_image(cls, z: Series) -> "TensorSeries":
        """z (x) 1 + 1 (x) z"""
        one = Series.one(z.context)
        return cls.outer(z, one) + cls.outer(one, z)

    # -- inspection -----------------------------------------------------

    @property
    def ring(self):
        return self.context.ring

    def coefficient(self, left: Word, right: Word) -> Coefficient:
        return self._terms.get((tuple(left), tuple(right)), self.ring.zero())

    def terms(self) -> List[Tuple[WordPair, Coefficient]]:
        return sorted(
            self._terms.items(),
            key=lambda item: (graded_key(item[0][0]), graded_key(item[0][1])),
        )

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree_part(self, k: int) -> "TensorSeries":
        return TensorSeries._trusted(
            self.context,
            {key: c for key, c in self._terms.items() if len(key[0]) + len(key[1]) == k},
        )

    # -- algebra ----------------------------------------------------------

    def _check(self, other: "TensorSeries") -> None:
        if not isinstance(other, TensorSeries):
            raise TypeError(f"Expected TensorSeries, got {type(other).__name__}")
        if other.context != self.context:
            raise ContextMismatchError(self.context, other.context)

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        self._check(other)
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result[key] + coeff if key in result else coeff
        return TensorSeries._trusted(self.context, result)

    def __neg__(self) -> "TensorSeries":
        return TensorSeries._trusted(self.context, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        return self + (-other)

    def scalar_mul(self, c: object) -> "TensorSeries":
        c = self.ring.coerce(c)
        return TensorSeries._trusted(self.context, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: "TensorSeries") -> "TensorSeries":
        """(a (x) b)(a' (x) b') = aa' (x) bb'"""
        self._check(other)
        limit = self.context.max_degree
        result: Dict[WordPair, Coefficient] = {}
        for (u1, v1), a in self._terms.items():
            room = limit - len(u1) - len(v1)
            for (u2, v2), b in other._terms.items():
                if len(u2) + len(v2) > room:
                    continue
                key = (u1 + u2, v1 + v2)
                result[key] = result[key] + a * b if key in result else a * b
        return TensorSeries._trusted(self.context, result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self.context == other.context and (self - other).is_zero()

    def __repr__(self) -> str:
        if not self._terms:
            return f"TensorSeries{self.context}: 0"
        parts = []
        for (u, v), coeff in self.terms():
            left = "".join(f"w{a}" for a in u) or "1"
            right = "".join(f"w{b}" for b in v) or "1"
            parts.append(f"{coeff}*{left}(x){right}")
        return f"TensorSeries{self.context}: " + " + ".join(parts)


def unit_tensor(context: SeriesContext) -> TensorSeries:
    """1 (x) 1"""
    return TensorSeries(context, {(EMPTY_WORD, EMPTY_WORD): 1})
