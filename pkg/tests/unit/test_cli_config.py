import random

import orjson
import pytest
import structlog
from pydantic import ValidationError as PydanticValidationError

from procompletion.application.requests import CliConfig
from procompletion.domain.entities.coefficients import RingTag
from procompletion.domain.entities.words import LyndonOrder, lyndon_words
from procompletion.shared.config import setup_logging
from procompletion.shared.config.settings import Settings, get_settings
from procompletion.shared.exceptions import ValidationError


def config(**fields):
    return CliConfig(command="padic", action="member", **fields)


class TestCliConfig:
    def test_prime_power_is_split(self):
        cfg = config(pm=27, ring="padic")
        assert (cfg.p, cfg.m) == (3, 3)

    @pytest.mark.parametrize(
        "fields",
        [
            {"pm": 12},
            {"pm": 8, "p": 3},
            {"pm": 8, "m": 2},
            {"p": 4},
            {"ring": "padic"},
            {"order": "custom"},
            {"n": 0},
            {"unknown": 1},
        ],
    )
    def test_rejects(self, fields):
        with pytest.raises(PydanticValidationError):
            config(**fields)

    def test_ring_tags(self):
        assert config(ring="int").ring_tag() == RingTag.integer()
        assert config(ring="padic", p=5).ring_tag(default_precision=9) == RingTag.padic(5, 9)
        assert config(ring="padic", p=5, prec=3).ring_tag() == RingTag.padic(5, 3)

    def test_orders(self):
        assert config().lyndon_order(2, 3) is None
        assert config(order="lex").lyndon_order(2, 3) == LyndonOrder.lex()
        custom = config(order="custom", ranking=[[2], [1]]).lyndon_order(2, 1)
        assert lyndon_words(2, 1, custom) == [(2,), (1,)]

    def test_random_order_follows_the_seed(self):
        first = config(order="random", seed=4).lyndon_order(2, 4)
        second = config(order="random", seed=4).lyndon_order(2, 4)
        assert first == second
        assert first == LyndonOrder.random(lyndon_words(2, 4), random.Random(4))

    def test_require_names_missing_flags(self):
        with pytest.raises(ValidationError, match="--nu, --pm"):
            config(p=2).require("p", "nu", "pm")


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("PROCOMPLETION_LOG_LEVEL", raising=False)
        settings = Settings(_env_file=None)
        assert settings.log_level == "INFO"
        assert settings.default_ring == "rat"
        assert settings.padic_precision == 20

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("PROCOMPLETION_PADIC_PRECISION", "31")
        monkeypatch.setenv("PROCOMPLETION_LOG_LEVEL", "debug")
        get_settings.cache_clear()
        settings = get_settings()
        assert settings.padic_precision == 31
        assert settings.log_level == "DEBUG"

    def test_bad_level(self):
        with pytest.raises(PydanticValidationError):
            Settings(_env_file=None, log_level="loud")


class TestLogging:
    def test_reconfiguring_reaches_existing_loggers(self, capsys):
        logger = structlog.get_logger("procompletion.tests")
        setup_logging(Settings(_env_file=None, log_level="INFO", log_format="console"))
        logger.info("first_event")
        setup_logging(Settings(_env_file=None, log_level="INFO", log_format="json"))
        logger.info("second_event", step=2)
        lines = capsys.readouterr().err.strip().splitlines()
        assert orjson.loads(lines[-1])["event"] == "second_event"

        setup_logging(Settings(_env_file=None, log_level="ERROR", log_format="json"))
        logger.info("hidden_event")
        assert "hidden_event" not in capsys.readouterr().err
