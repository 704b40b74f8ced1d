"""
Words over the alphabet 1..n, the two orders on monomials, and Lyndon words.

A word is a plain tuple of 1-based letters. Python's tuple comparison is
exactly the lexicographic order in which a proper prefix is smaller.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from ...shared.config.constants import Constants
from ...shared.exceptions import ParseError, WordError

Word = Tuple[int, ...]
EMPTY_WORD: Word = ()


def validate_word(word: Iterable[int], n: int) -> Word:
    """Return the word as a tuple, checking every letter lies in 1..n"""
    letters = tuple(word)
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(letter, int) or not 1 <= letter <= n:
            raise WordError(f"Letter {letter!r} outside alphabet 1..{n}", letters)
    return letters


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def _check_alphabet(u: Word, v: Word, n: Optional[int]) -> None:
    if n is not None:
        validate_word(u, n)
        validate_word(v, n)


def lex_compare(u: Word, v: Word, n: Optional[int] = None) -> int:
    """Lexicographic order; -1, 0 or 1"""
    _check_alphabet(u, v, n)
    return _cmp(tuple(u), tuple(v))


def graded_key(word: Word) -> Tuple[int, Word]:
    return len(word), tuple(word)


def graded_compare(u: Word, v: Word, n: Optional[int] = None) -> int:
    """Degree first, then lexicographic; -1, 0 or 1"""
    _check_alphabet(u, v, n)
    return _cmp(graded_key(u), graded_key(v))


def is_lyndon(word: Word) -> bool:
    """True iff the word is strictly smaller than each of its proper suffixes"""
    word = tuple(word)
    if not word:
        raise WordError("The empty word is not a Lyndon candidate", word)
    return all(word < word[i:] for i in range(1, len(word)))


def _duval(n: int, max_len: int) -> Iterator[Word]:
    # successor generator; yields Lyndon words in lexicographic order
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(letter + 1 for letter in w)
        period = len(w)
        while len(w) < max_len:
            w.append(w[-period])
        while w and w[-1] == n - 1:
            w.pop()


def necklace_count(n: int, k: int) -> int:
    """Number of Lyndon words of length k over n letters"""
    if k < 1:
        return 0
    total = sum(int(mobius(d)) * n ** (k // d) for d in divisors(k))
    return total // k


def sigma(n: int, nu: int) -> int:
    """Number of Lyndon words of length <= nu over n letters"""
    return sum(necklace_count(n, k) for k in range(1, nu + 1))


# -- factor orders ---------------------------------------------------------


class OrderKind(Enum):
    """Order used for Lyndon-word products"""
    GRADED = "graded"
    LEX = "lex"
    CUSTOM = "custom"


@dataclass(frozen=True)
class LyndonOrder:
    """
    A total order on Lyndon words.

    GRADED sorts by length, then lexicographically; LEX is the pure
    lexicographic order. CUSTOM uses either an explicit ranking (a list of
    words, first is smallest) or a caller-supplied comparator.
    """
    kind: OrderKind = OrderKind.GRADED
    ranking: Tuple[Word, ...] = ()
    comparator: Optional[Callable[[Word, Word], int]] = field(default=None, compare=False)

    @classmethod
    def graded(cls) -> "LyndonOrder":
        return cls(OrderKind.GRADED)

    @classmethod
    def lex(cls) -> "LyndonOrder":
        return cls(OrderKind.LEX)

    @classmethod
    def from_ranking(cls, words: Sequence[Word]) -> "LyndonOrder":
        ranking = tuple(tuple(w) for w in words)
        if len(set(ranking)) != len(ranking):
            raise WordError("A ranking may not list a word twice")
        return cls(OrderKind.CUSTOM, ranking)

    @classmethod
    def from_comparator(cls, comparator: Callable[[Word, Word], int]) -> "LyndonOrder":
        return cls(OrderKind.CUSTOM, comparator=comparator)

    @classmethod
    def random(cls, words: Sequence[Word], rng: random.Random) -> "LyndonOrder":
        shuffled = list(words)
        rng.shuffle(shuffled)
        return cls.from_ranking(shuffled)

    @property
    def name(self) -> str:
        return self.kind.value

    def sort(self, words: Iterable[Word]) -> List[Word]:
        words = list(words)
        if self.kind is OrderKind.GRADED:
            return sorted(words, key=graded_key)
        if self.kind is OrderKind.LEX:
            return sorted(words)
        if self.comparator is not None:
            return sorted(words, key=cmp_to_key(self.comparator))
        rank: Dict[Word, int] = {w: i for i, w in enumerate(self.ranking)}
        missing = [w for w in words if w not in rank]
        if missing:
            raise WordError("Word missing from custom ranking", missing[0])
        return sorted(words, key=rank.__getitem__)


def lyndon_words(n: int, max_len: int, order: Optional[LyndonOrder] = None) -> List[Word]:
    """All Lyndon words of length <= max_len over n letters, sorted by `order`"""
    if n < 1 or max_len < 1:
        raise WordError(f"Need n >= 1 and max_len >= 1, got n={n}, max_len={max_len}")
    order = order or LyndonOrder.graded()
    return order.sort(_duval(n, max_len))


def lyndon_words_of_degree(n: int, k: int) -> List[Word]:
    """Lyndon words of length exactly k, lexicographically sorted"""
    return [w for w in _duval(n, k) if len(w) == k]


# -- factorization and parenthesization ------------------------------------


def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """Split a Lyndon word as (prefix, longest proper Lyndon suffix)"""
    word = tuple(word)
    if len(word) < 2 or not is_lyndon(word):
        raise WordError("Standard factorization needs a Lyndon word of length >= 2", word)
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise WordError("No Lyndon suffix found", word)  # unreachable: one letter is Lyndon


@dataclass(frozen=True)
class Leaf:
    letter: int

    def leaves(self) -> Word:
        return (self.letter,)


@dataclass(frozen=True)
class Node:
    left: "ParenTree"
    right: "ParenTree"

    def leaves(self) -> Word:
        return self.left.leaves() + self.right.leaves()


ParenTree = Union[Leaf, Node]


def parenthesize(word: Word) -> ParenTree:
    """Bracket a Lyndon word by iterated standard factorization"""
    word = tuple(word)
    if not word or not is_lyndon(word):
        raise WordError("Parenthesization needs a Lyndon word", word)
    if len(word) == 1:
        return Leaf(word[0])
    prefix, suffix = standard_factorization(word)
    return Node(parenthesize(prefix), parenthesize(suffix))


def letter_name(letter: int, n: int) -> str:
    if n <= Constants.MAX_LETTER_ALPHABET:
        return Constants.LETTERS[letter - 1]
    return str(letter)


def paren_to_string(tree: ParenTree, n: int = Constants.MAX_LETTER_ALPHABET) -> str:
    if isinstance(tree, Leaf):
        return letter_name(tree.letter, n)
    return f"({paren_to_string(tree.left, n)}∘{paren_to_string(tree.right, n)})"


def format_word(word: Word, n: int = Constants.MAX_LETTER_ALPHABET) -> str:
    if n <= Constants.MAX_LETTER_ALPHABET:
        return "".join(letter_name(letter, n) for letter in word) or "1"
    return " ".join(str(letter) for letter in word) or "1"


def parse_word(text: str, n: int) -> Word:
    """Parse "aab", "1 1 2" or "[1, 1, 2]" into a word over n letters"""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].replace(",", " ")
    parts = text.split()
    try:
        if parts and all(part.lstrip("-").isdigit() for part in parts):
            letters = [int(part) for part in parts]
        elif len(parts) <= 1 and all(ch in Constants.LETTERS for ch in text):
            letters = [Constants.LETTERS.index(ch) + 1 for ch in text]
        else:
            raise ParseError(f"Cannot parse word: {text!r}", "word")
        return validate_word(letters, n)
    except WordError as e:
        raise ParseError(e.message, "word") from e
