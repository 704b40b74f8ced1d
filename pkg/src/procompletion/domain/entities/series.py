"""
Truncated noncommutative power series in omega_1, ..., omega_n.

A Series is exact modulo the ideal of terms of degree > max_degree.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ...shared.exceptions import (
    CoefficientDomainError,
    ContextMismatchError,
    PreconditionError,
    TruncationError,
)
from .coefficients import Coefficient, RingKind, RingTag, binomial
from .words import EMPTY_WORD, Word, graded_key, validate_word


@dataclass(frozen=True)
class SeriesContext:
    """Alphabet size, truncation degree and coefficient ring shared by operands"""
    n: int
    max_degree: int
    ring: RingTag

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"Alphabet size must be >= 1, got {self.n}")
        if self.max_degree < 0:
            raise PreconditionError(f"Truncation degree must be >= 0, got {self.max_degree}")

    def with_max_degree(self, max_degree: int) -> "SeriesContext":
        return SeriesContext(self.n, max_degree, self.ring)

    def with_ring(self, ring: RingTag) -> "SeriesContext":
        return SeriesContext(self.n, self.max_degree, ring)

    def __str__(self) -> str:
        return f"(n={self.n}, N={self.max_degree}, ring={self.ring})"


class Series:
    """
    Immutable sparse map Word -> Coefficient, truncated at context.max_degree.

    p-adic zeros O(p^k) stay in the map so their precision reaches every
    later test of the coefficient; only exact zeros are dropped.
    """

    __slots__ = ("context", "_terms")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, context: SeriesContext, terms: Optional[Mapping[Word, object]] = None):
        ring = context.ring
        clean: Dict[Word, Coefficient] = {}
        for word, coeff in (terms or {}).items():
            word = validate_word(word, context.n)
            if len(word) > context.max_degree:
                continue
            value = ring.coerce(coeff)
            if not ring.is_exact_zero(value):
                clean[word] = value
        self.context = context
        self._terms = clean

    @classmethod
    def _trusted(cls, context: SeriesContext, terms: Dict[Word, Coefficient]) -> "Series":
        # terms already validated, coerced, truncated; exact zeros are dropped here
        obj = cls.__new__(cls)
        obj.context = context
        is_exact_zero = context.ring.is_exact_zero
        obj._terms = {w: c for w, c in terms.items() if not is_exact_zero(c)}
        return obj

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, context: SeriesContext) -> "Series":
        return cls._trusted(context, {})

    @classmethod
    def one(cls, context: SeriesContext) -> "Series":
        return cls.monomial(context, EMPTY_WORD)

    @classmethod
    def monomial(cls, context: SeriesContext, word: Iterable[int], coeff: object = 1) -> "Series":
        return cls(context, {tuple(word): coeff})

    @classmethod
    def generator(cls, context: SeriesContext, j: int) -> "Series":
        """The variable omega_j"""
        return cls.monomial(context, (j,))

    # -- inspection -----------------------------------------------------

    @property
    def ring(self) -> RingTag:
        return self.context.ring

    @property
    def max_degree(self) -> int:
        return self.context.max_degree

    def coefficient(self, word: Iterable[int]) -> Coefficient:
        return self._terms.get(tuple(word), self.ring.zero())

    def terms(self) -> List[Tuple[Word, Coefficient]]:
        """Terms sorted graded-lexicographically"""
        return sorted(self._terms.items(), key=lambda item: graded_key(item[0]))

    def __iter__(self) -> Iterator[Tuple[Word, Coefficient]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def words(self) -> List[Word]:
        return [w for w, _ in self.terms()]

    def _support(self) -> List[Word]:
        is_zero = self.ring.is_zero
        return [w for w, c in self._terms.items() if not is_zero(c)]

    def is_zero(self) -> bool:
        return not self._support()

    def constant_term(self) -> Coefficient:
        return self.coefficient(EMPTY_WORD)

    def has_unit_constant(self) -> bool:
        return self.ring.is_zero(self.constant_term() - self.ring.one())

    def min_degree(self) -> Optional[int]:
        return min((len(w) for w in self._support()), default=None)

    def is_homogeneous(self, k: int) -> bool:
        return all(len(w) == k for w in self._support())

    def is_integral(self) -> bool:
        return all(self.ring.is_integral(c) for c in self._terms.values())

    # -- linear structure -----------------------------------------------

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"Expected Series, got {type(other).__name__}")
        if other.context != self.context:
            raise ContextMismatchError(self.context, other.context)

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        result = dict(self._terms)
        for word, coeff in other._terms.items():
            result[word] = result[word] + coeff if word in result else coeff
        return Series._trusted(self.context, result)

    def __neg__(self) -> "Series":
        return Series._trusted(self.context, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scalar_mul(self, c: object) -> "Series":
        c = self.ring.coerce(c)
        return Series._trusted(self.context, {w: c * v for w, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.context == other.context and (self - other).is_zero()

    # -- multiplicative structure -----------------------------------------

    def __mul__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            return self.scalar_mul(other)
        self._check(other)
        limit = self.max_degree
        by_degree: Dict[int, List[Tuple[Word, Coefficient]]] = defaultdict(list)
        for word, coeff in other._terms.items():
            by_degree[len(word)].append((word, coeff))
        result: Dict[Word, Coefficient] = {}
        for u, a in self._terms.items():
            room = limit - len(u)
            for degree, bucket in by_degree.items():
                if degree > room:
                    continue
                for v, b in bucket:
                    w = u + v
                    result[w] = result[w] + a * b if w in result else a * b
        return Series._trusted(self.context, result)

    def __rmul__(self, other: object) -> "Series":
        return self.scalar_mul(other)

    def _nilpotent_sum(self, x: "Series", coefficients: Callable[[int], object]) -> "Series":
        # sum_{m >= 0} coefficients(m) x^m, finite because x has no constant term
        result = Series.zero(self.context)
        power = Series.one(self.context)
        for m in range(self.max_degree + 1):
            if not power._terms:
                break
            coeff = coefficients(m)
            if not self.ring.is_exact_zero(self.ring.coerce(coeff)):
                result = result + power.scalar_mul(coeff)
            power = power * x
        return result

    def _split_unit(self, operation: str) -> "Series":
        if not self.has_unit_constant():
            raise PreconditionError(f"{operation} needs constant term 1", operation)
        # x = self - 1 with no constant term at all, so x^m starts in degree m
        return Series._trusted(self.context, {w: c for w, c in self._terms.items() if w})

    def _require_rationals(self, operation: str) -> None:
        if not self.ring.contains_rationals:
            raise CoefficientDomainError(f"{operation} needs a ring containing Q", self.ring.name)

    def inverse(self) -> "Series":
        """Neumann expansion of (1 + x)^-1"""
        x = self._split_unit("inverse")
        return self._nilpotent_sum(x, lambda m: (-1) ** m)

    def exp(self) -> "Series":
        if not self.ring.is_zero(self.constant_term()):
            raise PreconditionError("exp needs zero constant term", "exp")
        self._require_rationals("exp")
        return self._nilpotent_sum(self, lambda m: self.ring.reciprocal(factorial(m)))

    def ln(self) -> "Series":
        x = self._split_unit("ln")
        self._require_rationals("ln")

        def coeff(m: int) -> Coefficient:
            if m == 0:
                return self.ring.zero()
            return self.ring.reciprocal(m if m % 2 else -m)

        return self._nilpotent_sum(x, coeff)

    def power(self, t: object) -> "Series":
        """(1 + x)^t as the binomial series"""
        x = self._split_unit("power")
        exponent = _exponent_in(self.ring, t)
        return self._nilpotent_sum(x, lambda m: binomial(exponent, m))

    # -- truncation -----------------------------------------------------

    def _check_degree(self, k: int) -> None:
        if k < 0 or k > self.max_degree:
            raise TruncationError(k, self.max_degree)

    def truncate(self, k: int) -> "Series":
        """Drop every term of degree > k (same context)"""
        self._check_degree(k)
        return Series._trusted(self.context, {w: c for w, c in self._terms.items() if len(w) <= k})

    def homogeneous_component(self, k: int) -> "Series":
        self._check_degree(k)
        return Series._trusted(self.context, {w: c for w, c in self._terms.items() if len(w) == k})

    def equal_mod(self, other: "Series", k: int) -> bool:
        """True iff self and other agree in every degree <= k"""
        self._check(other)
        self._check_degree(k)
        return all(len(w) > k for w in (self - other)._support())

    def restrict(self, max_degree: int) -> "Series":
        """The same series in a context with a smaller truncation degree"""
        self._check_degree(max_degree)
        context = self.context.with_max_degree(max_degree)
        return Series._trusted(context, {w: c for w, c in self._terms.items() if len(w) <= max_degree})

    def change_ring(self, ring: RingTag) -> "Series":
        context = self.context.with_ring(ring)
        return Series(context, {w: ring.coerce(c) for w, c in self._terms.items()})

    # -- substitution ---------------------------------------------------

    def substitute(self, images: Mapping[int, "Series"]) -> "Series":
        """Apply the algebra endomorphism omega_j -> images[j]"""
        for image in images.values():
            self._check(image)
        products: Dict[Word, Series] = {EMPTY_WORD: Series.one(self.context)}

        def product(word: Word) -> Series:
            if word not in products:
                products[word] = product(word[:-1]) * images[word[-1]]
            return products[word]

        result = Series.zero(self.context)
        for word, coeff in self.terms():
            result = result + product(word).scalar_mul(coeff)
        return result

    # -- display --------------------------------------------------------

    def __repr__(self) -> str:
        if not self._terms:
            return f"Series{self.context}: 0"
        parts = []
        for word, coeff in self.terms():
            monomial = "".join(f"w{letter}" for letter in word) or "1"
            parts.append(f"{coeff}*{monomial}")
        return f"Series{self.context}: " + " + ".join(parts)


def _exponent_in(ring: RingTag, t: object) -> Coefficient:
    """Exponent for power(): exact ints stay ints, anything else lives in the ring"""
    if isinstance(t, bool):
        raise CoefficientDomainError("bool is not an exponent", ring.name)
    if ring.kind is RingKind.INTEGER:
        # binomial series over Z only for t >= 0; invert first for negative t
        value = ring.coerce(t)
        if value < 0:
            raise CoefficientDomainError(f"power {value} over Z needs inverse() first", ring.name)
        return value
    if isinstance(t, int):
        return t
    if isinstance(t, Fraction) and t.denominator == 1:
        return t.numerator
    value = ring.coerce(t)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def group_commutator(g: Series, h: Series) -> Series:
    """{g, h} = g^-1 h^-1 g h"""
    return g.inverse() * h.inverse() * g * h


def lie_bracket(p: Series, q: Series) -> Series:
    """[p, q] = pq - qp"""
    return p * q - q * p
