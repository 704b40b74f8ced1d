import io
import random
from dataclasses import dataclass
from itertools import product
from typing import List, Optional

import orjson
import pytest

from procompletion.domain.entities.coefficients import RingTag
from procompletion.domain.entities.group_word import GroupWord
from procompletion.domain.entities.series import Series, SeriesContext
from procompletion.domain.entities.words import lyndon_words
from procompletion.presentation.cli.app import main
from procompletion.shared.config.settings import get_settings


def random_group_word(rng: random.Random, n: int, max_length: int) -> GroupWord:
    length = rng.randint(0, max_length)
    return GroupWord(tuple((rng.randint(1, n), rng.choice((1, -1))) for _ in range(length)))


def random_coordinates(rng: random.Random, n: int, max_degree: int, bound: int = 3) -> dict:
    return {w: rng.randint(-bound, bound) for w in lyndon_words(n, max_degree)}


def random_series(rng: random.Random, context: SeriesContext, density: float = 0.5, bound: int = 3) -> Series:
    """A series with constant term 1 and small random coefficients"""
    terms = {(): 1}
    for k in range(1, context.max_degree + 1):
        for word in product(range(1, context.n + 1), repeat=k):
            if rng.random() < density:
                terms[word] = rng.randint(-bound, bound)
    return Series(context, terms)


@pytest.fixture
def rat_context():
    return SeriesContext(2, 4, RingTag.rational())


@pytest.fixture
def int_context():
    return SeriesContext(2, 4, RingTag.integer())


@pytest.fixture(autouse=True)
def quiet_settings(monkeypatch):
    monkeypatch.setenv("PROCOMPLETION_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@dataclass
class CliRun:
    code: int
    stdout: bytes
    stderr: str

    @property
    def json(self):
        return orjson.loads(self.stdout)

    @property
    def error(self):
        return orjson.loads(self.stderr.strip().splitlines()[-1])

    @property
    def text(self) -> str:
        return self.stdout.decode("utf-8")


@pytest.fixture
def run_cli():
    def run(args: List[str], stdin: Optional[bytes] = None) -> CliRun:
        out = io.BytesIO()
        err = io.StringIO()
        code = main(args, stdin=io.BytesIO(stdin or b""), stdout=out, stderr=err)
        return CliRun(code, out.getvalue(), err.getvalue())

    return run
