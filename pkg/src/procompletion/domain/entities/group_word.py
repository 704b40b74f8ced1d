from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from ...shared.config.constants import Constants
from ...shared.exceptions import ParseError, WordError

Letter = Tuple[int, int]


@dataclass(frozen=True)
class GroupWord:
    """Element of F_n written as g_{j1}^{e1} g_{j2}^{e2} ...; exponents nonzero"""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for generator, exponent in self.letters:
            if generator < 1:
                raise WordError(f"Generator index must be >= 1, got {generator}")
            if exponent == 0:
                raise WordError(f"Zero exponent on generator {generator}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Letter]) -> "GroupWord":
        return cls(tuple((int(j), int(e)) for j, e in pairs))

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((j, -e) for j, e in reversed(self.letters)))

    def reduced(self) -> "GroupWord":
        """Merge adjacent powers of one generator and drop cancelled ones"""
        stack = []
        for j, e in self.letters:
            if stack and stack[-1][0] == j:
                total = stack[-1][1] + e
                stack.pop()
                if total:
                    stack.append((j, total))
            else:
                stack.append((j, e))
        return GroupWord(tuple(stack))

    def max_generator(self) -> int:
        return max((j for j, _ in self.letters), default=0)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"g{j}" if e == 1 else f"g{j}^{e}" for j, e in self.letters)


def parse_group_word(text: str, n: int) -> GroupWord:
    """Parse "1 2 -1" or "a b A" (upper case is the inverse) into a word over n generators"""
    letters = []
    for token in text.split():
        if token.lstrip("+-").isdigit():
            value = int(token)
            if value == 0:
                raise ParseError("Generator 0 does not exist", "group_word")
            letters.append((abs(value), 1 if value > 0 else -1))
            continue
        for ch in token:
            lower = ch.lower()
            if lower not in Constants.LETTERS:
                raise ParseError(f"Cannot parse group word token {token!r}", "group_word")
            letters.append((Constants.LETTERS.index(lower) + 1, -1 if ch.isupper() else 1))
    for j, _ in letters:
        if j > n:
            raise ParseError(f"Generator {j} outside 1..{n}", "group_word")
    return GroupWord(tuple(letters))
