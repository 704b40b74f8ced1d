"""
Command line front end.

    procompletion [--log-level L] [--log-format F] <command> <action> [options]

Results go to stdout (or --out) as canonical JSON; logs and errors go to
stderr. Exit codes: 0 ok, 1 property fails, 2 bad input, 3 precondition.
"""

import argparse
import sys
from typing import Any, BinaryIO, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import orjson
import structlog
from pydantic import ValidationError as PydanticValidationError

from ...application.requests import CliConfig, CommandResult
from ...domain.entities.coefficients import PAdic, RingTag
from ...domain.entities.group_word import parse_group_word
from ...domain.entities.series import Series, SeriesContext
from ...domain.entities.subgroup import OpenSubgroupSpec
from ...domain.entities.words import LyndonOrder, Word, format_word, parse_word
from ...domain.repositories.artifact_repository import ArtifactRepository
from ...infrastructure.container import Container
from ...infrastructure.serialization import json_codec, report_codec
from ...shared.config import Constants, Coproduct, Settings, get_settings, setup_logging
from ...shared.exceptions import ParseError, ProCompletionError, RepositoryError, ValidationError
from .tables import format_table

logger = structlog.get_logger(__name__)

K = Constants

Handler = Callable[[CliConfig], CommandResult]

ORDERS = [K.ORDER_GRADED, K.ORDER_LEX, K.ORDER_CUSTOM, K.ORDER_RANDOM]


# -- argument parsing --------------------------------------------------------


def _context_options(parser: argparse.ArgumentParser, *degree_flags: str) -> None:
    parser.add_argument("--n", type=int, help="number of generators")
    parser.add_argument(*(degree_flags or ("--degree", "--max-degree")), dest="degree", type=int,
                        help="truncation degree N")


def _ring_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", choices=K.SUPPORTED_RINGS)
    parser.add_argument("--p", type=int, help="prime of the p-adic ring")
    parser.add_argument("--prec", type=int, help="p-adic digits carried")


def _io_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="inputs", action="append", default=[], metavar="PATH",
                        help="input document, '-' for stdin")
    parser.add_argument("--out", dest="output", default=K.STDIO_PATH, metavar="PATH")


def _order_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--order", choices=ORDERS, help="factor order on Lyndon words")
    parser.add_argument("--ranking", metavar="PATH", help="JSON list of words for --order custom")
    parser.add_argument("--seed", type=int, help="seed for --order random")


def _subgroup_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nu", type=int, help="degree bound of U(nu, p^m)")
    parser.add_argument("--p", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--pm", type=int, help="p^m given as one number")
    parser.add_argument("--prec", type=int, help="p-adic digits carried")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="procompletion",
        description="Exact arithmetic in the pronilpotent and pro-p completions of free groups",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--log-format", choices=["console", "json"])
    commands = parser.add_subparsers(dest="command", required=True)

    lyndon = commands.add_parser("lyndon", help="Lyndon words").add_subparsers(dest="action", required=True)
    p = lyndon.add_parser("list", help="enumerate Lyndon words")
    _context_options(p, "--max-len")
    _order_options(p)
    p.add_argument("--json", action="store_true")
    p = lyndon.add_parser("count", help="Lyndon words per length")
    _context_options(p, "--max-len")
    p.add_argument("--json", action="store_true")
    for action in ("factor", "paren"):
        p = lyndon.add_parser(action)
        p.add_argument("word", help="'aab', '1 1 2' or '[1,1,2]'")
        p.add_argument("--n", type=int)
        p.add_argument("--json", action="store_true")

    series = commands.add_parser("series", help="series arithmetic").add_subparsers(dest="action", required=True)
    p = series.add_parser("embed", help="Magnus image of a free-group word")
    _context_options(p)
    _ring_options(p)
    p.add_argument("--word", required=True, help="'1 2 -1' or 'a b A'")
    p.add_argument("--out", dest="output", default=K.STDIO_PATH, metavar="PATH")
    for action in ("mul", "inv", "exp", "ln", "comm", "bch", "gamma", "gamma-inv"):
        _io_options(series.add_parser(action))
    p = series.add_parser("pow")
    _io_options(p)
    p.add_argument("--t", required=True, help="exponent, an exact rational")
    p = series.add_parser("coproduct")
    _io_options(p)
    p.add_argument("--coproduct", choices=[c.value for c in Coproduct])

    check = commands.add_parser("check", help="property tests").add_subparsers(dest="action", required=True)
    for action in ("grouplike", "primitive", "integral", "closure"):
        p = check.add_parser(action)
        _io_options(p)
        if action == "grouplike":
            p.add_argument("--coproduct", choices=[c.value for c in Coproduct])

    malcev = commands.add_parser("malcev", help="Malcev coordinates").add_subparsers(dest="action", required=True)
    for action in ("decompose", "compose", "reconstruct", "lie"):
        p = malcev.add_parser(action)
        _io_options(p)
        if action != "lie":
            _order_options(p)

    padic = commands.add_parser("padic", help="open subgroups and p-adic limits").add_subparsers(
        dest="action", required=True
    )
    for action in ("member", "order"):
        p = padic.add_parser(action)
        _io_options(p)
        _subgroup_options(p)
    p = padic.add_parser("coset")
    _io_options(p)
    _subgroup_options(p)
    _order_options(p)
    p.add_argument("--n", type=int)
    p.add_argument("--enumerate", action="store_true", help="all cosets of the quotient")
    p.add_argument("--table", action="store_true")
    p = padic.add_parser("quotient")
    p.add_argument("--n", type=int)
    _subgroup_options(p)
    p.add_argument("--out", dest="output", default=K.STDIO_PATH, metavar="PATH")
    p.add_argument("--table", action="store_true")
    p = padic.add_parser("converge", help="Xi_L^k_i -> Xi_L^t")
    _context_options(p)
    p.add_argument("--word", required=True, help="Lyndon word L")
    p.add_argument("--t", required=True, help="p-adic integer exponent, an exact rational")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--out", dest="output", default=K.STDIO_PATH, metavar="PATH")
    p.add_argument("--table", action="store_true")
    return parser


def _load_ranking(repository: ArtifactRepository, path: str) -> List[List[int]]:
    payload = repository.load(path)
    if isinstance(payload, dict):
        payload = payload.get(K.KEY_RANKING)
    if not isinstance(payload, list):
        raise ParseError("A ranking is a JSON list of words", path)
    ranking = []
    for item in payload:
        if isinstance(item, str):
            ranking.append(list(parse_word(item, K.MAX_LETTER_ALPHABET)))
        else:
            ranking.append(list(json_codec.decode_word(item, K.MAX_LETTER_ALPHABET)))
    return ranking


def config_from_args(
    args: argparse.Namespace, settings: Settings, repository: ArtifactRepository
) -> CliConfig:
    fields: Dict[str, Any] = {
        key: value
        for key, value in vars(args).items()
        if key in CliConfig.model_fields and key != "ranking" and value is not None
    }
    if args.command == "padic":
        fields["ring"] = K.RING_PADIC
    fields.setdefault("ring", settings.default_ring)
    if "order" not in fields and (args.command, args.action) != ("malcev", "compose"):
        fields["order"] = settings.default_order
    fields.setdefault("seed", settings.random_seed)
    if args.command == "lyndon":
        fields["text"] = not args.json
    else:
        fields["text"] = bool(getattr(args, "table", False))
    if getattr(args, "ranking", None):
        fields["ranking"] = _load_ranking(repository, args.ranking)
    try:
        return CliConfig(**fields)
    except PydanticValidationError as e:
        errors = "; ".join(f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}" for err in e.errors())
        raise ValidationError(f"Invalid arguments: {errors}") from e


def exit_code_for(error: ProCompletionError) -> int:
    if isinstance(error, (ParseError, ValidationError, RepositoryError)):
        return K.EXIT_PARSE_ERROR
    return K.EXIT_PRECONDITION_ERROR


# -- dispatch ----------------------------------------------------------------


class CliApplication:
    """Maps (command, action) to use cases and renders their results"""

    def __init__(self, container: Container):
        self.container = container
        self.settings = container.get_settings()
        self.repository = container.get_artifact_repository()
        self._handlers: Dict[Tuple[str, str], Handler] = {
            ("lyndon", "list"): self._lyndon_list,
            ("lyndon", "count"): self._lyndon_count,
            ("lyndon", "factor"): self._lyndon_factor,
            ("lyndon", "paren"): self._lyndon_paren,
            ("series", "embed"): self._series_embed,
            ("series", "mul"): self._series_mul,
            ("series", "inv"): lambda cfg: self._series_unary(cfg, "inverse"),
            ("series", "exp"): lambda cfg: self._series_unary(cfg, "exp"),
            ("series", "ln"): lambda cfg: self._series_unary(cfg, "ln"),
            ("series", "pow"): self._series_pow,
            ("series", "comm"): self._series_comm,
            ("series", "bch"): self._series_bch,
            ("series", "gamma"): lambda cfg: self._series_gamma(cfg, inverse=False),
            ("series", "gamma-inv"): lambda cfg: self._series_gamma(cfg, inverse=True),
            ("series", "coproduct"): self._series_coproduct,
            ("check", "grouplike"): self._check_grouplike,
            ("check", "primitive"): lambda cfg: self._check(cfg, "primitive"),
            ("check", "integral"): lambda cfg: self._check(cfg, "integral"),
            ("check", "closure"): lambda cfg: self._check(cfg, "closure"),
            ("malcev", "decompose"): self._malcev_decompose,
            ("malcev", "compose"): self._malcev_compose,
            ("malcev", "reconstruct"): self._malcev_reconstruct,
            ("malcev", "lie"): self._malcev_lie,
            ("padic", "member"): self._padic_member,
            ("padic", "order"): self._padic_order,
            ("padic", "coset"): self._padic_coset,
            ("padic", "quotient"): self._padic_quotient,
            ("padic", "converge"): self._padic_converge,
        }

    def run(self, cfg: CliConfig) -> int:
        handler = self._handlers.get((cfg.command, cfg.action))
        if handler is None:
            raise ValidationError(f"Unknown command: {cfg.command} {cfg.action}")
        logger.info("command_started", command=cfg.command, action=cfg.action)
        result = handler(cfg)
        if cfg.text and result.lines:
            self.repository.save_text(cfg.output, "\n".join(result.lines) + "\n")
        else:
            self.repository.save(cfg.output, result.payload)
        return K.EXIT_OK if result.holds else K.EXIT_PROPERTY_FAILS

    # -- helpers

    @staticmethod
    def _single_input(cfg: CliConfig) -> str:
        if len(cfg.inputs) != 1:
            raise ValidationError(f"{cfg.command} {cfg.action} needs exactly one --in")
        return cfg.inputs[0]

    @staticmethod
    def _word_argument(cfg: CliConfig) -> Tuple[Word, int]:
        cfg.require("word")
        if cfg.n is not None:
            return parse_word(cfg.word, cfg.n), cfg.n
        word = parse_word(cfg.word, K.MAX_LETTER_ALPHABET)
        return word, max(word, default=1)

    @staticmethod
    def _spec(cfg: CliConfig) -> OpenSubgroupSpec:
        cfg.require("nu", "p", "m")
        return OpenSubgroupSpec(cfg.nu, cfg.p, cfg.m)

    @staticmethod
    def _series_result(g: Series) -> CommandResult:
        return CommandResult(json_codec.encode_series(g))

    # -- lyndon

    def _lyndon_list(self, cfg: CliConfig) -> CommandResult:
        cfg.require("n", "degree")
        order = cfg.lyndon_order(cfg.n, cfg.degree) or LyndonOrder.graded()
        words = self.container.get_lyndon_use_case().list_words(cfg.n, cfg.degree, order)
        payload = report_codec.encode_word_list(cfg.n, cfg.degree, order, words)
        return CommandResult(payload, lines=[", ".join(format_word(w, cfg.n) for w in words)])

    def _lyndon_count(self, cfg: CliConfig) -> CommandResult:
        cfg.require("n", "degree")
        counts = self.container.get_lyndon_use_case().counts(cfg.n, cfg.degree)
        lines = format_table(["length", "count"], sorted(counts.items()))
        return CommandResult(report_codec.encode_counts(cfg.n, counts), lines=lines)

    def _lyndon_factor(self, cfg: CliConfig) -> CommandResult:
        word, n = self._word_argument(cfg)
        left, right = self.container.get_lyndon_use_case().factor(word)
        return CommandResult(
            report_codec.encode_factorization(word, left, right),
            lines=[f"({format_word(left, n)}, {format_word(right, n)})"],
        )

    def _lyndon_paren(self, cfg: CliConfig) -> CommandResult:
        word, n = self._word_argument(cfg)
        rendered = self.container.get_lyndon_use_case().paren(word, n)
        return CommandResult(report_codec.encode_paren(word, rendered), lines=[rendered])

    # -- series

    def _series_embed(self, cfg: CliConfig) -> CommandResult:
        cfg.require("n", "degree", "word")
        context = SeriesContext(cfg.n, cfg.degree, cfg.ring_tag(self.settings.padic_precision))
        word = parse_group_word(cfg.word, cfg.n)
        return self._series_result(self.container.get_series_use_case().embed(context, word))

    def _series_mul(self, cfg: CliConfig) -> CommandResult:
        return self._series_result(self.container.get_series_use_case().multiply(cfg.inputs))

    def _series_unary(self, cfg: CliConfig, operation: str) -> CommandResult:
        use_case = self.container.get_series_use_case()
        return self._series_result(getattr(use_case, operation)(self._single_input(cfg)))

    def _series_pow(self, cfg: CliConfig) -> CommandResult:
        cfg.require("t")
        t = json_codec.parse_rational(cfg.t)
        g = self.container.get_series_use_case().power(self._single_input(cfg), t)
        return self._series_result(g)

    def _series_comm(self, cfg: CliConfig) -> CommandResult:
        return self._series_result(self.container.get_series_use_case().commutator(cfg.inputs))

    def _series_bch(self, cfg: CliConfig) -> CommandResult:
        return self._series_result(self.container.get_series_use_case().bch(cfg.inputs))

    def _series_gamma(self, cfg: CliConfig, inverse: bool) -> CommandResult:
        g = self.container.get_series_use_case().gamma(self._single_input(cfg), inverse=inverse)
        return self._series_result(g)

    def _series_coproduct(self, cfg: CliConfig) -> CommandResult:
        tensor = self.container.get_series_use_case().coproduct(
            self._single_input(cfg), Coproduct(cfg.coproduct)
        )
        return CommandResult(json_codec.encode_tensor(tensor))

    # -- check

    def _check_grouplike(self, cfg: CliConfig) -> CommandResult:
        which = Coproduct(cfg.coproduct)
        outcome = self.container.get_check_use_case().grouplike(self._single_input(cfg), which)
        return CommandResult(report_codec.encode_check(outcome, which.value), holds=outcome.holds)

    def _check(self, cfg: CliConfig, prop: str) -> CommandResult:
        outcome = getattr(self.container.get_check_use_case(), prop)(self._single_input(cfg))
        return CommandResult(report_codec.encode_check(outcome), holds=outcome.holds)

    # -- malcev

    def _malcev_decompose(self, cfg: CliConfig) -> CommandResult:
        use_case = self.container.get_malcev_use_case()
        g = use_case.load_series(self._single_input(cfg))
        coordinates = use_case.decompose(g, cfg.lyndon_order(g.context.n, g.max_degree))
        if coordinates is None:
            outcome = self.container.get_check_use_case().check_grouplike(g)
            return CommandResult(report_codec.encode_check(outcome, Coproduct.TWISTED.value), holds=False)
        return CommandResult(json_codec.encode_malcev(coordinates, g.context.n, g.max_degree))

    def _malcev_compose(self, cfg: CliConfig) -> CommandResult:
        use_case = self.container.get_malcev_use_case()
        context, coordinates = use_case.load_coordinates(self._single_input(cfg))
        order = cfg.lyndon_order(context.n, context.max_degree)
        return self._series_result(use_case.compose(context, coordinates, order))

    def _malcev_reconstruct(self, cfg: CliConfig) -> CommandResult:
        use_case = self.container.get_malcev_use_case()
        context, prescribed = use_case.load_prescribed(self._single_input(cfg))
        order = cfg.lyndon_order(context.n, context.max_degree)
        g, coordinates = use_case.reconstruct(context, prescribed, order)
        payload = {
            K.KEY_SERIES: json_codec.encode_series(g),
            K.KEY_COORDINATES: json_codec.encode_malcev(coordinates, context.n, context.max_degree),
        }
        return CommandResult(payload)

    def _malcev_lie(self, cfg: CliConfig) -> CommandResult:
        use_case = self.container.get_malcev_use_case()
        z = use_case.load_series(self._single_input(cfg))
        payload = {
            K.KEY_N: z.context.n,
            K.KEY_MAX_DEGREE: z.max_degree,
            K.KEY_RING: json_codec.encode_ring(z.ring),
            K.KEY_TERMS: json_codec.encode_lyndon_coefficients(use_case.lie(z)),
        }
        return CommandResult(payload)

    # -- padic

    def _padic_member(self, cfg: CliConfig) -> CommandResult:
        spec = self._spec(cfg)
        member = self.container.get_padic_use_case().member(self._single_input(cfg), spec, cfg.prec)
        return CommandResult(report_codec.encode_membership(spec, member), holds=member)

    def _padic_order(self, cfg: CliConfig) -> CommandResult:
        spec = self._spec(cfg)
        order = self.container.get_padic_use_case().order(self._single_input(cfg), spec, cfg.prec)
        return CommandResult(report_codec.encode_order_result(spec, order))

    def _padic_coset(self, cfg: CliConfig) -> CommandResult:
        spec = self._spec(cfg)
        use_case = self.container.get_padic_use_case()
        if cfg.enumerate:
            cfg.require("n")
            words, cosets = use_case.enumerate(cfg.n, spec, cfg.lyndon_order(cfg.n, spec.nu))
            lines = format_table([format_word(w, cfg.n) for w in words], sorted(cosets))
            lines.append(f"{len(cosets)} cosets, p^(m*sigma) = {spec.expected_index(cfg.n)}")
            return CommandResult(report_codec.encode_cosets(spec, cfg.n, words, cosets), lines=lines)
        g = use_case.load_padic(self._single_input(cfg), spec, cfg.prec)
        residues = use_case.coset(g, spec, cfg.lyndon_order(g.context.n, spec.nu))
        lines = format_table(["word", "residue"], [(format_word(w, g.context.n), r) for w, r in residues.items()])
        return CommandResult(report_codec.encode_coset(spec, residues), lines=lines)

    def _padic_quotient(self, cfg: CliConfig) -> CommandResult:
        cfg.require("n")
        spec = self._spec(cfg)
        summary = self.container.get_padic_use_case().quotient(cfg.n, spec)
        lines = format_table(
            ["spec", "quotient order", "coordinate cosets", "p^(m*sigma)"],
            [(str(spec), summary.order, summary.coordinate_cosets, summary.expected)],
        )
        return CommandResult(report_codec.encode_quotient(summary), lines=lines)

    def _padic_converge(self, cfg: CliConfig) -> CommandResult:
        cfg.require("n", "degree", "t")
        prec = cfg.prec or self.settings.padic_precision
        context = SeriesContext(cfg.n, cfg.degree, RingTag.padic(cfg.p, prec))
        word = parse_word(cfg.word, cfg.n)
        t = PAdic.from_fraction(json_codec.parse_rational(cfg.t), cfg.p, prec)
        report = self.container.get_padic_use_case().converge(context, word, t, cfg.steps)
        lines = format_table(
            ["i", "k_i", "agreement"], [(r.step, r.exponent, r.agreement) for r in report.rows]
        )
        return CommandResult(report_codec.encode_convergence(report), lines=lines)


# -- entry point -------------------------------------------------------------


def _write_error(stream: TextIO, error: Dict[str, Any]) -> None:
    stream.write(orjson.dumps(error, default=str).decode("utf-8") + "\n")
    stream.flush()


def main(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[BinaryIO] = None,
    stdout: Optional[BinaryIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except PydanticValidationError as e:
        _write_error(stderr, ValidationError(f"Invalid settings: {e}").to_dict())
        return K.EXIT_PARSE_ERROR
    overrides = {k: v for k, v in (("log_level", args.log_level), ("log_format", args.log_format)) if v}
    if overrides:
        settings = settings.model_copy(update=overrides)
    setup_logging(settings)

    container = Container(settings, stdin=stdin, stdout=stdout)
    try:
        cfg = config_from_args(args, settings, container.get_artifact_repository())
        return CliApplication(container).run(cfg)
    except ProCompletionError as e:
        code = exit_code_for(e)
        logger.error("command_failed", error_code=e.error_code, exit_code=code)
        _write_error(stderr, e.to_dict())
        return code
