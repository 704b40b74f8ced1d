from typing import Dict, List, Optional, Tuple

import structlog

from ...domain.entities.words import (
    LyndonOrder,
    Word,
    is_lyndon,
    lyndon_words,
    necklace_count,
    paren_to_string,
    parenthesize,
    standard_factorization,
)
from ...shared.exceptions import WordError

logger = structlog.get_logger(__name__)


class LyndonUseCase:
    """Use case for Lyndon word enumeration and bracketing"""

    def list_words(self, n: int, max_len: int, order: Optional[LyndonOrder] = None) -> List[Word]:
        words = lyndon_words(n, max_len, order)
        logger.info("lyndon_list", n=n, max_len=max_len, count=len(words))
        return words

    def counts(self, n: int, max_len: int) -> Dict[int, int]:
        """Number of Lyndon words of each length, from the necklace formula"""
        return {k: necklace_count(n, k) for k in range(1, max_len + 1)}

    def factor(self, word: Word) -> Tuple[Word, Word]:
        self._require_lyndon(word)
        return standard_factorization(word)

    def paren(self, word: Word, n: int) -> str:
        self._require_lyndon(word)
        return paren_to_string(parenthesize(word), n)

    @staticmethod
    def _require_lyndon(word: Word) -> None:
        if not is_lyndon(word):
            raise WordError("Not a Lyndon word", word)
