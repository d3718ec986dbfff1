"""Exact base-60 arithmetic, Pythagorean triples and replayable tablet computations."""

from .core import (
    DEFAULT_NOTATION,
    NotationConfig,
    Ordering,
    SexDigits,
    compare,
    divide,
    format_sex,
    is_regular,
    parse,
    reciprocal_digits,
    reciprocal_exact,
    square,
    to_digits,
    to_significant,
)
from .roots import NamedConstant, euclidean_distance, sqrt_exact, sqrt_heron
from .solvers import (
    pi_interpretations,
    solve_bm85196,
    solve_smt1,
    solve_smt15,
    solve_smt19,
    verify_smt3,
    ybc7289_diagonal,
)
from .trace import ProblemResult, StepTrace, verify_trace
from .triples import EuclidParams, Triple, decompose, enumerate_primitives, euclid_generate

__version__ = "0.1.0"
