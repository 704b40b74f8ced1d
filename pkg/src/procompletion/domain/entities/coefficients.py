from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Union

from ...shared.exceptions import (
    CoefficientDomainError,
    DivisionByZeroError,
    PrecisionError,
    RingMismatchError,
)


def padic_valuation(x: int, p: int) -> int:
    """Exponent of p in the nonzero integer x"""
    if x == 0:
        raise CoefficientDomainError("Valuation of zero is infinite")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True, eq=False)
class PAdic:
    """
    Element u * p**val of Q_p, with the unit u known modulo p**digits.

    `prec` is the relative precision cap M shared by the whole ring;
    `digits` <= prec is the relative precision this value still carries.
    A zero has unit == digits == 0. It is exact when `bound` is None and
    otherwise stands for O(p**bound), a value known only modulo p**bound.
    """
    p: int
    prec: int
    val: int = 0
    unit: int = 0
    digits: int = 0
    bound: Optional[int] = None

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def zero(cls, p: int, prec: int) -> "PAdic":
        return cls(p, prec)

    @classmethod
    def zero_to(cls, p: int, prec: int, absolute: int) -> "PAdic":
        """O(p**absolute)"""
        return cls(p, prec, bound=absolute)

    @classmethod
    def _normalized(cls, p: int, prec: int, val: int, s: int, absolute: int) -> "PAdic":
        # s * p**val is known modulo p**absolute
        if absolute <= val:
            return cls.zero_to(p, prec, absolute)
        s %= p ** (absolute - val)
        if s == 0:
            return cls.zero_to(p, prec, absolute)
        k = padic_valuation(s, p)
        val += k
        digits = min(prec, absolute - val)
        return cls(p, prec, val, (s // p ** k) % p ** digits, digits)

    @classmethod
    def from_int(cls, k: int, p: int, prec: int) -> "PAdic":
        if k == 0:
            return cls(p, prec)
        v = padic_valuation(k, p)
        return cls(p, prec, v, (k // p ** v) % p ** prec, prec)

    @classmethod
    def from_fraction(
        cls, q: Union[int, Fraction], p: int, prec: int, digits: Optional[int] = None
    ) -> "PAdic":
        q = Fraction(q)
        if q == 0:
            return cls(p, prec)
        digits = prec if digits is None else max(digits, 1)
        num_val = padic_valuation(q.numerator, p)
        den_val = padic_valuation(q.denominator, p)
        num_unit = q.numerator // p ** num_val
        den_unit = q.denominator // p ** den_val
        modulus = p ** digits
        unit = (num_unit * pow(den_unit, -1, modulus)) % modulus
        return cls(p, prec, num_val - den_val, unit, digits)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        """Zero to the precision carried, exact or not"""
        return self.digits == 0

    def is_exact_zero(self) -> bool:
        return self.digits == 0 and self.bound is None

    def is_integral(self) -> bool:
        if self.is_zero():
            return self.bound is None or self.bound >= 0
        return self.val >= 0

    def is_unit(self) -> bool:
        return not self.is_zero() and self.val == 0

    @property
    def absolute_precision(self) -> Optional[int]:
        """p-adic digits known in absolute terms; None for the exact zero"""
        if self.is_zero():
            return self.bound
        return self.val + self.digits

    def reduce(self, m: int) -> int:
        """Residue modulo p**m of a p-adic integer"""
        if self.is_exact_zero():
            return 0
        if not self.is_zero() and self.val < 0:
            raise CoefficientDomainError(f"{self} is not a {self.p}-adic integer")
        absolute = self.absolute_precision
        if absolute < m:
            raise PrecisionError(m, absolute, self.p)
        if self.is_zero() or self.val >= m:
            return 0
        return (self.unit * self.p ** self.val) % self.p ** m

    def lift(self) -> int:
        """Smallest nonnegative integer representative of a p-adic integer"""
        if self.is_zero():
            return 0
        if self.val < 0:
            raise CoefficientDomainError(f"{self} is not a {self.p}-adic integer")
        return self.unit * self.p ** self.val

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: object) -> "PAdic":
        if isinstance(other, PAdic):
            if other.p != self.p or other.prec != self.prec:
                raise RingMismatchError(self.ring_name, other.ring_name)
            return other
        if isinstance(other, bool):
            raise TypeError("bool is not a coefficient")
        if isinstance(other, int):
            return PAdic.from_int(other, self.p, self.prec)
        if isinstance(other, Fraction):
            return PAdic.from_fraction(other, self.p, self.prec)
        raise TypeError(f"Cannot combine p-adic with {type(other).__name__}")

    @property
    def ring_name(self) -> str:
        return f"padic({self.p},{self.prec})"

    def _coerce_exact(self, other: object) -> "PAdic":
        # rationals are exact: give them at least the absolute precision of self
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool) and other != 0 \
                and not self.is_exact_zero():
            q = Fraction(other)
            q_val = padic_valuation(q.numerator, self.p) - padic_valuation(q.denominator, self.p)
            needed = self.absolute_precision - q_val
            return PAdic.from_fraction(q, self.p, self.prec, max(self.prec, needed))
        return self._coerce(other)

    def __add__(self, other: object) -> "PAdic":
        b = self._coerce_exact(other)
        if self.is_exact_zero():
            return b
        if b.is_exact_zero():
            return self
        absolute = min(self.absolute_precision, b.absolute_precision)
        if self.is_zero() and b.is_zero():
            return PAdic.zero_to(self.p, self.prec, absolute)
        if self.is_zero() or b.is_zero():
            known = b if self.is_zero() else self
            return PAdic._normalized(self.p, self.prec, known.val, known.unit, absolute)
        v = min(self.val, b.val)
        s = self.unit * self.p ** (self.val - v) + b.unit * self.p ** (b.val - v)
        return PAdic._normalized(self.p, self.prec, v, s, absolute)

    __radd__ = __add__

    def __neg__(self) -> "PAdic":
        if self.is_zero():
            return self
        return PAdic(self.p, self.prec, self.val, (-self.unit) % self.p ** self.digits, self.digits)

    def __sub__(self, other: object) -> "PAdic":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self + (-other)
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "PAdic":
        return (-self) + other

    def __mul__(self, other: object) -> "PAdic":
        b = self._coerce(other)
        if self.is_exact_zero() or b.is_exact_zero():
            return PAdic.zero(self.p, self.prec)
        if self.is_zero() or b.is_zero():
            # O(p^k) * x = O(p^(k + v(x))), O(p^k) * O(p^l) = O(p^(k + l))
            low = [c.bound if c.is_zero() else c.val for c in (self, b)]
            return PAdic.zero_to(self.p, self.prec, low[0] + low[1])
        digits = min(self.digits, b.digits)
        modulus = self.p ** digits
        return PAdic(self.p, self.prec, self.val + b.val, (self.unit * b.unit) % modulus, digits)

    __rmul__ = __mul__

    def inverse(self) -> "PAdic":
        if self.is_zero():
            raise DivisionByZeroError(self.ring_name)
        modulus = self.p ** self.digits
        return PAdic(self.p, self.prec, -self.val, pow(self.unit, -1, modulus), self.digits)

    def __truediv__(self, other: object) -> "PAdic":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: object) -> "PAdic":
        return self._coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return (self - other).is_zero()
        try:
            b = self._coerce(other)
        except (TypeError, RingMismatchError):
            return NotImplemented
        return (self - b).is_zero()

    def __repr__(self) -> str:
        if self.is_exact_zero():
            return f"PAdic(0, p={self.p})"
        if self.is_zero():
            return f"PAdic(O({self.p}^{self.bound}))"
        return f"PAdic({self.unit}*{self.p}^{self.val} mod {self.p}^{self.val + self.digits})"

    __str__ = __repr__


Coefficient = Union[int, Fraction, PAdic]


class RingKind(Enum):
    """Coefficient ring enumeration"""
    INTEGER = "int"
    RATIONAL = "rat"
    PADIC = "padic"


@dataclass(frozen=True)
class RingTag:
    """The coefficient ring of a series: Z, Q or Q_p at fixed precision"""
    kind: RingKind
    p: Optional[int] = None
    prec: Optional[int] = None

    def __post_init__(self):
        if self.kind is RingKind.PADIC:
            if self.p is None or self.p < 2:
                raise CoefficientDomainError(f"p-adic ring needs p >= 2, got {self.p}")
            if self.prec is None or self.prec < 1:
                raise CoefficientDomainError(f"p-adic ring needs precision >= 1, got {self.prec}")
        elif self.p is not None or self.prec is not None:
            raise CoefficientDomainError(f"{self.kind.value} ring takes no prime or precision")

    @classmethod
    def integer(cls) -> "RingTag":
        return cls(RingKind.INTEGER)

    @classmethod
    def rational(cls) -> "RingTag":
        return cls(RingKind.RATIONAL)

    @classmethod
    def padic(cls, p: int, prec: int) -> "RingTag":
        return cls(RingKind.PADIC, p, prec)

    @property
    def name(self) -> str:
        if self.kind is RingKind.PADIC:
            return f"padic({self.p},{self.prec})"
        return self.kind.value

    @property
    def contains_rationals(self) -> bool:
        return self.kind is not RingKind.INTEGER

    def __str__(self) -> str:
        return self.name

    # -- elements -------------------------------------------------------

    def zero(self) -> Coefficient:
        return self.coerce(0)

    def one(self) -> Coefficient:
        return self.coerce(1)

    def coerce(self, x: object) -> Coefficient:
        """Bring an int, Fraction or PAdic into this ring"""
        if isinstance(x, bool):
            raise CoefficientDomainError("bool is not a coefficient", self.name)
        if self.kind is RingKind.INTEGER:
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise CoefficientDomainError(f"{x} is not an integer", self.name)
                return x.numerator
        elif self.kind is RingKind.RATIONAL:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        else:
            if isinstance(x, PAdic):
                if x.p != self.p or x.prec != self.prec:
                    raise RingMismatchError(self.name, x.ring_name)
                return x
            if isinstance(x, (int, Fraction)):
                return PAdic.from_fraction(x, self.p, self.prec)
        if isinstance(x, PAdic):
            raise RingMismatchError(self.name, x.ring_name)
        raise CoefficientDomainError(f"Cannot use {type(x).__name__} as a coefficient", self.name)

    def check(self, c: object) -> Coefficient:
        """Verify that c already is an element of this ring"""
        expected = {
            RingKind.INTEGER: int,
            RingKind.RATIONAL: Fraction,
            RingKind.PADIC: PAdic,
        }[self.kind]
        if isinstance(c, bool) or not isinstance(c, expected):
            other = c.ring_name if isinstance(c, PAdic) else type(c).__name__
            raise RingMismatchError(self.name, other)
        if isinstance(c, PAdic) and (c.p != self.p or c.prec != self.prec):
            raise RingMismatchError(self.name, c.ring_name)
        return c

    def is_zero(self, c: Coefficient) -> bool:
        if isinstance(c, PAdic):
            return c.is_zero()
        return c == 0

    def is_exact_zero(self, c: Coefficient) -> bool:
        if isinstance(c, PAdic):
            return c.is_exact_zero()
        return c == 0

    def is_integral(self, c: Coefficient) -> bool:
        if isinstance(c, PAdic):
            return c.is_integral()
        return Fraction(c).denominator == 1

    # -- ring operations with membership checks --------------------------

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.check(a) + self.check(b)

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.check(a) - self.check(b)

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.check(a) * self.check(b)

    def neg(self, a: Coefficient) -> Coefficient:
        return -self.check(a)

    def equal(self, a: Coefficient, b: Coefficient) -> bool:
        return self.is_zero(self.check(a) - self.check(b))

    def inverse(self, a: Coefficient) -> Coefficient:
        a = self.check(a)
        if self.is_zero(a):
            raise DivisionByZeroError(self.name)
        if isinstance(a, PAdic):
            return a.inverse()
        if self.kind is RingKind.INTEGER:
            if a not in (1, -1):
                raise CoefficientDomainError(f"{a} is not a unit of Z", self.name)
            return a
        return 1 / a

    def reciprocal(self, k: int) -> Coefficient:
        """1/k for a nonzero integer k; needs a ring containing Q"""
        if not self.contains_rationals:
            raise CoefficientDomainError(f"1/{k} does not exist in Z", self.name)
        return self.inverse(self.coerce(k))

    def binomial(self, t: object, m: int) -> Coefficient:
        return self.coerce(binomial(self.coerce(t), m))


def binomial(t: Coefficient, m: int) -> Coefficient:
    """Generalized binomial coefficient t(t-1)...(t-m+1)/m!"""
    if m < 0:
        raise CoefficientDomainError(f"binomial needs m >= 0, got {m}")
    if isinstance(t, bool):
        raise CoefficientDomainError("bool is not a coefficient")
    if isinstance(t, int):
        if t >= 0:
            return comb(t, m)
        return (-1) ** m * comb(m - t - 1, m)
    result = t * 0 + 1
    for j in range(m):
        result = result * (t - j)
    return result / factorial(m)


def rational_to_padic(q: Union[int, Fraction], p: int, prec: int) -> PAdic:
    """Embed a rational number into Q_p at relative precision prec"""
    return PAdic.from_fraction(q, p, prec)
