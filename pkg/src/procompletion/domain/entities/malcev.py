from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Tuple

from ...shared.exceptions import WordError
from .coefficients import Coefficient, RingTag
from .words import LyndonOrder, Word, graded_key, is_lyndon

# Lyndon word -> coefficient t_L of xi_L
LyndonBasisCoefficients = Dict[Word, Coefficient]


def sorted_coefficients(coefficients: Mapping[Word, Coefficient]) -> List[Tuple[Word, Coefficient]]:
    return sorted(coefficients.items(), key=lambda item: graded_key(item[0]))


@dataclass(frozen=True, eq=False)
class MalcevCoordinates:
    """
    Exponents t_L of the ordered product of the Xi_L^{t_L}.

    `entries` follows `order`; absent words have exponent zero.
    """
    ring: RingTag
    order: LyndonOrder
    entries: Tuple[Tuple[Word, Coefficient], ...] = ()

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self):
        for word, _ in self.entries:
            if not word or not is_lyndon(word):
                raise WordError("Malcev coordinates are indexed by Lyndon words", word)

    @classmethod
    def from_mapping(
        cls, ring: RingTag, order: LyndonOrder, mapping: Mapping[Word, object]
    ) -> "MalcevCoordinates":
        coerced = {tuple(w): ring.coerce(t) for w, t in mapping.items()}
        words = order.sort(coerced)
        return cls(ring, order, tuple((w, coerced[w]) for w in words))

    def as_dict(self) -> Dict[Word, Coefficient]:
        return dict(self.entries)

    def get(self, word: Word) -> Coefficient:
        return self.as_dict().get(tuple(word), self.ring.zero())

    def __iter__(self) -> Iterator[Tuple[Word, Coefficient]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def words(self) -> List[Word]:
        return [w for w, _ in self.entries]

    def nonzero(self) -> Dict[Word, Coefficient]:
        return {w: t for w, t in self.entries if not self.ring.is_zero(t)}

    def is_integral(self) -> bool:
        """True iff every t_L lies in Z (or Z_p)"""
        return all(self.ring.is_integral(t) for _, t in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MalcevCoordinates):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        left, right = self.nonzero(), other.nonzero()
        if left.keys() != right.keys():
            return False
        return all(self.ring.is_zero(left[w] - right[w]) for w in left)

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {t}" for w, t in self.entries)
        return f"MalcevCoordinates({self.order.name}, {{{body}}})"
