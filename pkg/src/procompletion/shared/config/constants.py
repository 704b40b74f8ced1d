from enum import Enum


class Constants:
    """Application constants"""

    # Exit codes shared by every subcommand
    EXIT_OK = 0
    EXIT_PROPERTY_FAILS = 1
    EXIT_PARSE_ERROR = 2
    EXIT_PRECONDITION_ERROR = 3

    # Ring names accepted on the command line
    RING_INT = "int"
    RING_RAT = "rat"
    RING_PADIC = "padic"
    SUPPORTED_RINGS = [RING_INT, RING_RAT, RING_PADIC]

    # Factor order names
    ORDER_GRADED = "graded"
    ORDER_LEX = "lex"
    ORDER_CUSTOM = "custom"
    ORDER_RANDOM = "random"

    # JSON field names
    KEY_N = "n"
    KEY_MAX_DEGREE = "max_degree"
    KEY_RING = "ring"
    KEY_TERMS = "terms"
    KEY_WORD = "word"
    KEY_COEFF = "coeff"
    KEY_LEFT = "left"
    KEY_RIGHT = "right"
    KEY_ORDER = "order"
    KEY_RANKING = "ranking"
    KEY_ENTRIES = "entries"
    KEY_T = "t"

    # p-adic scalar fields
    KEY_P = "p"
    KEY_PREC = "prec"
    KEY_VAL = "val"
    KEY_UNIT = "unit"
    KEY_DIGITS = "digits"
    KEY_BOUND = "bound"

    # Report fields
    KEY_WORDS = "words"
    KEY_COUNTS = "counts"
    KEY_FACTORS = "factors"
    KEY_PAREN = "paren"
    KEY_PROPERTY = "property"
    KEY_HOLDS = "holds"
    KEY_REASON = "reason"
    KEY_COPRODUCT = "coproduct"
    KEY_VIOLATION = "violation"
    KEY_ALPHA = "alpha"
    KEY_BETA = "beta"
    KEY_LHS = "lhs"
    KEY_RHS = "rhs"
    KEY_SPEC = "spec"
    KEY_NU = "nu"
    KEY_M = "m"
    KEY_MEMBER = "member"
    KEY_ORDER_VALUE = "order_mod_subgroup"
    KEY_RESIDUE = "residue"
    KEY_COSETS = "cosets"
    KEY_COSET_COUNT = "count"
    KEY_EXPECTED = "expected"
    KEY_QUOTIENT_ORDER = "quotient_order"
    KEY_INDEX_HYPOTHESIS = "index_hypothesis"
    KEY_BINOMIALS_PERIODIC = "binomials_periodic"
    KEY_ROWS = "rows"
    KEY_STEP = "step"
    KEY_EXPONENT = "exponent"
    KEY_AGREEMENT = "agreement"
    KEY_EXACT = "exact"
    KEY_NONDECREASING = "nondecreasing"
    KEY_INTEGRAL = "integral"
    KEY_COORDINATES = "coordinates"
    KEY_SERIES = "series"

    # Letters used for the a, b, c, ... word syntax
    LETTERS = "abcdefghijklmnopqrstuvwxyz"
    MAX_LETTER_ALPHABET = len(LETTERS)

    # Path meaning stdin/stdout
    STDIO_PATH = "-"


class Coproduct(Enum):
    """Which coproduct a grouplike check refers to"""
    STANDARD = "standard"
    TWISTED = "twisted"
