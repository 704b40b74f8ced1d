"""JSON shapes of command results: verdicts, coset tables, convergence reports."""

from typing import Any, Dict, FrozenSet, Mapping, Optional, Sequence, Tuple

from ...application.use_cases.check_use_case import CheckOutcome
from ...application.use_cases.padic_use_case import QuotientSummary
from ...domain.entities.subgroup import ConvergenceReport, OpenSubgroupSpec
from ...domain.entities.words import LyndonOrder, Word
from ...domain.services.coproduct import GrouplikeViolation
from ...shared.config.constants import Constants
from .json_codec import encode_coefficient, encode_order, encode_word

K = Constants


def encode_spec(spec: OpenSubgroupSpec) -> Dict[str, Any]:
    return {
        K.KEY_NU: spec.nu,
        K.KEY_P: spec.p,
        K.KEY_M: spec.m,
        K.KEY_INDEX_HYPOTHESIS: spec.index_hypothesis,
        K.KEY_BINOMIALS_PERIODIC: spec.binomials_periodic,
    }


def encode_word_list(n: int, max_len: int, order: LyndonOrder, words: Sequence[Word]) -> Dict[str, Any]:
    encoded: Dict[str, Any] = {
        K.KEY_N: n,
        K.KEY_MAX_DEGREE: max_len,
        K.KEY_WORDS: [encode_word(w) for w in words],
    }
    encoded.update(encode_order(order))
    return encoded


def encode_counts(n: int, counts: Mapping[int, int]) -> Dict[str, Any]:
    return {K.KEY_N: n, K.KEY_COUNTS: {str(k): v for k, v in counts.items()}}


def encode_factorization(word: Word, left: Word, right: Word) -> Dict[str, Any]:
    return {
        K.KEY_WORD: encode_word(word),
        K.KEY_FACTORS: [encode_word(left), encode_word(right)],
    }


def encode_paren(word: Word, rendered: str) -> Dict[str, Any]:
    return {K.KEY_WORD: encode_word(word), K.KEY_PAREN: rendered}


def encode_violation(violation: GrouplikeViolation) -> Dict[str, Any]:
    return {
        K.KEY_ALPHA: encode_word(violation.alpha),
        K.KEY_BETA: encode_word(violation.beta),
        K.KEY_LHS: encode_coefficient(violation.lhs),
        K.KEY_RHS: encode_coefficient(violation.rhs),
    }


def encode_check(outcome: CheckOutcome, coproduct: Optional[str] = None) -> Dict[str, Any]:
    encoded: Dict[str, Any] = {
        K.KEY_PROPERTY: outcome.prop,
        K.KEY_HOLDS: outcome.holds,
        K.KEY_REASON: outcome.reason,
        K.KEY_VIOLATION: encode_violation(outcome.violation) if outcome.violation else None,
    }
    if coproduct is not None:
        encoded[K.KEY_COPRODUCT] = coproduct
    return encoded


def encode_membership(spec: OpenSubgroupSpec, member: bool) -> Dict[str, Any]:
    return {K.KEY_SPEC: encode_spec(spec), K.KEY_MEMBER: member}


def encode_order_result(spec: OpenSubgroupSpec, order: int) -> Dict[str, Any]:
    return {K.KEY_SPEC: encode_spec(spec), K.KEY_ORDER_VALUE: order}


def encode_coset(spec: OpenSubgroupSpec, residues: Mapping[Word, int]) -> Dict[str, Any]:
    return {
        K.KEY_SPEC: encode_spec(spec),
        K.KEY_ENTRIES: [
            {K.KEY_WORD: encode_word(w), K.KEY_RESIDUE: r} for w, r in residues.items()
        ],
    }


def encode_cosets(
    spec: OpenSubgroupSpec, n: int, words: Sequence[Word], cosets: FrozenSet[Tuple[int, ...]]
) -> Dict[str, Any]:
    return {
        K.KEY_SPEC: encode_spec(spec),
        K.KEY_N: n,
        K.KEY_WORDS: [encode_word(w) for w in words],
        K.KEY_COSETS: [list(c) for c in sorted(cosets)],
        K.KEY_COSET_COUNT: len(cosets),
        K.KEY_EXPECTED: spec.expected_index(n),
    }


def encode_quotient(summary: QuotientSummary) -> Dict[str, Any]:
    return {
        K.KEY_SPEC: encode_spec(summary.spec),
        K.KEY_N: summary.n,
        K.KEY_QUOTIENT_ORDER: summary.order,
        K.KEY_COSET_COUNT: summary.coordinate_cosets,
        K.KEY_EXPECTED: summary.expected,
    }


def encode_convergence(report: ConvergenceReport) -> Dict[str, Any]:
    return {
        K.KEY_WORD: encode_word(report.word),
        K.KEY_P: report.p,
        K.KEY_PREC: report.precision,
        K.KEY_ROWS: [
            {
                K.KEY_STEP: row.step,
                K.KEY_EXPONENT: str(row.exponent),
                K.KEY_AGREEMENT: row.agreement,
                K.KEY_EXACT: row.exact,
            }
            for row in report.rows
        ],
        K.KEY_NONDECREASING: report.is_nondecreasing(),
    }

