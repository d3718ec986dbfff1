"""Re-executable step traces binding scribal wording to exact values.

Each :class:`Step` names the core operation that produced it, so a whole
trace can be replayed and checked (:func:`verify_trace`).  Traces serialize
to a fixed JSON layout::

    {"problem_id": "SMT19_P1",
     "values": {"x": {"num": "32", "den": "1", "sex": "32"}, ...},
     "steps": [{"index": 1, "label": "...", "op": "sub",
                "operands": ["1", "0;15"], "result": "0;45"}, ...]}

Values whose base-60 expansion does not terminate are written truncated
with a trailing ``...``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import jsonschema

from .core import as_exact, divide, parse, reciprocal_exact, square, terminating_places, to_digits
from .errors import NotExactlySolvable, TraceMismatch
from .roots import sqrt_exact, sqrt_heron

__all__ = [
    "ProblemId",
    "Step",
    "StepTrace",
    "ProblemResult",
    "TraceBuilder",
    "OPS",
    "render_value",
    "verify_trace",
    "result_to_json",
    "verify_trace_json",
    "TRACE_SCHEMA",
]

ELLIPSIS = "..."


class ProblemId(str, enum.Enum):
    SMT1 = "SMT1"
    SMT3_L29 = "SMT3_L29"
    SMT3_L30 = "SMT3_L30"
    SMT3_L31 = "SMT3_L31"
    SMT3_L32 = "SMT3_L32"
    PI_BRUINS = "PI_BRUINS"
    PI_NEUGEBAUER = "PI_NEUGEBAUER"
    PI_STOREHOUSE = "PI_STOREHOUSE"
    SMT15_P1 = "SMT15_P1"
    SMT15_P2 = "SMT15_P2"
    SMT19_P1 = "SMT19_P1"
    BM85196_FWD = "BM85196_FWD"
    BM85196_INV = "BM85196_INV"
    YBC7289 = "YBC7289"


def _checked_sqrt(x):
    r = sqrt_exact(x)
    if r is None:
        raise NotExactlySolvable(f"{render_value(x)} is not the square of a rational")
    return r


def _heron(x, seed, iterations):
    if iterations.denominator != 1:
        raise ValueError("iteration count must be an integer")
    return sqrt_heron(x, seed, int(iterations))


OPS: dict[str, tuple[int, Callable[..., Fraction]]] = {
    "const": (1, lambda x: x),
    "add": (2, lambda x, y: x + y),
    "sub": (2, lambda x, y: x - y),
    "mul": (2, lambda x, y: x * y),
    "div": (2, divide),
    "half": (1, lambda x: x / 2),
    "square": (1, square),
    "recip": (1, reciprocal_exact),
    "sqrt": (1, _checked_sqrt),
    "heron": (3, _heron),
}


def render_value(x, places: int = 6) -> str:
    """Full digits when the expansion terminates, else ``places`` digits and ``...``."""
    x = as_exact(x)
    needed = terminating_places(x)
    if needed is not None:
        return str(to_digits(x, needed))
    return str(to_digits(x, places)) + ELLIPSIS


@dataclass(frozen=True)
class Step:
    index: int
    label: str
    op: str
    operands: tuple[Fraction, ...]
    result: Fraction

    def replay(self) -> Fraction:
        arity, fn = OPS[self.op]
        if len(self.operands) != arity:
            raise TraceMismatch(f"step {self.index}: {self.op} takes {arity} operands")
        return fn(*self.operands)


@dataclass(frozen=True)
class StepTrace:
    problem_id: ProblemId
    steps: tuple[Step, ...]

    def __post_init__(self):
        for i, s in enumerate(self.steps, 1):
            if s.index != i:
                raise ValueError(f"step indices must run 1..n, found {s.index} at position {i}")

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def results(self) -> list[Fraction]:
        return [s.result for s in self.steps]

    def lines(self, places: int = 6) -> list[str]:
        return [f"{s.index:>3}. {s.label}: {render_value(s.result, places)}" for s in self.steps]


@dataclass(frozen=True)
class ProblemResult:
    """Named outputs of a solver and the trace that produced them.

    ``display`` optionally carries renderings the solver considers canonical,
    e.g. a digit string at the precision printed on the tablet.
    """

    values: dict[str, Fraction]
    trace: StepTrace
    display: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        produced = set(self.trace.results())
        for name, v in self.values.items():
            if v not in produced:
                raise ValueError(f"value {name}={v} is not the result of any step")

    def __getitem__(self, name: str) -> Fraction:
        return self.values[name]

    @property
    def problem_id(self) -> ProblemId:
        return self.trace.problem_id


class TraceBuilder:
    """Accumulates steps while a solver runs.

    ``label`` may use ``{0}``, ``{1}``, ... for the rendered operands and
    ``{r}`` for the rendered result.
    """

    def __init__(self, problem_id: ProblemId):
        self.problem_id = ProblemId(problem_id)
        self._steps: list[Step] = []

    def step(self, label: str, op: str, *operands) -> Fraction:
        ops = tuple(as_exact(o) for o in operands)
        arity, fn = OPS[op]
        assert len(ops) == arity, (op, ops)
        result = fn(*ops)
        text = label.format(*(render_value(o) for o in ops), r=render_value(result))
        self._steps.append(Step(len(self._steps) + 1, text, op, ops, result))
        return result

    def extend(self, other: StepTrace, prefix: str = "") -> None:
        for s in other.steps:
            self._steps.append(Step(len(self._steps) + 1, prefix + s.label, s.op, s.operands, s.result))

    def build(self) -> StepTrace:
        return StepTrace(self.problem_id, tuple(self._steps))

    def result(self, values: dict, display: dict | None = None) -> ProblemResult:
        return ProblemResult(dict(values), self.build(), dict(display or {}))


def verify_trace(trace: StepTrace) -> int:
    """Replay every step exactly; raise :class:`TraceMismatch` on the first disagreement."""
    for s in trace.steps:
        got = s.replay()
        if got != s.result:
            raise TraceMismatch(f"step {s.index} ({s.label}): replay gives {got}, recorded {s.result}")
    return len(trace.steps)


# ---------------------------------------------------------------------------
# JSON

_SEX = {"type": "string"}

TRACE_SCHEMA = {
    "type": "object",
    "required": ["problem_id", "values", "steps"],
    "properties": {
        "problem_id": {"type": "string", "enum": [p.value for p in ProblemId]},
        "values": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["num", "den", "sex"],
                "properties": {
                    "num": {"type": "string", "pattern": r"^-?\d+$"},
                    "den": {"type": "string", "pattern": r"^[1-9]\d*$"},
                    "sex": _SEX,
                },
            },
        },
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "label", "operands", "result"],
                "properties": {
                    "index": {"type": "integer", "minimum": 1},
                    "label": {"type": "string"},
                    "op": {"type": "string", "enum": sorted(OPS)},
                    "operands": {"type": "array", "items": _SEX},
                    "result": _SEX,
                },
            },
        },
    },
}


def result_to_json(result: ProblemResult, places: int = 6) -> dict:
    return {
        "problem_id": result.problem_id.value,
        "values": {
            name: {"num": str(v.numerator), "den": str(v.denominator), "sex": render_value(v, places)}
            for name, v in result.values.items()
        },
        "steps": [
            {
                "index": s.index,
                "label": s.label,
                "op": s.op,
                "operands": [render_value(o, places) for o in s.operands],
                "result": render_value(s.result, places),
            }
            for s in result.trace.steps
        ],
    }


def _read_sex(text: str) -> tuple[Fraction, bool]:
    if text.endswith(ELLIPSIS):
        return parse(text[: -len(ELLIPSIS)]), False
    return parse(text), True


def verify_trace_json(obj: dict) -> tuple[int, int]:
    """Validate a serialized trace and replay it from its digit strings.

    Steps whose operands were all written exactly are replayed and compared
    exactly; a step with a truncated (``...``) operand cannot be replayed from
    text and is skipped.  Returns ``(checked, skipped)``.
    """
    jsonschema.validate(obj, TRACE_SCHEMA)
    checked = skipped = 0
    for i, s in enumerate(obj["steps"], 1):
        if s["index"] != i:
            raise TraceMismatch(f"step indices are not contiguous at {s['index']}")
        if "op" not in s:
            skipped += 1
            continue
        operands = [_read_sex(o) for o in s["operands"]]
        if not all(exact for _, exact in operands):
            skipped += 1
            continue
        arity, fn = OPS[s["op"]]
        if len(operands) != arity:
            raise TraceMismatch(f"step {i}: {s['op']} takes {arity} operands")
        got = fn(*(v for v, _ in operands))
        want, want_exact = _read_sex(s["result"])
        if want_exact:
            ok = got == want
        else:
            places = len(s["result"].split(";", 1)[1].split(",")) if ";" in s["result"] else 0
            ok = to_digits(got, places).value() == want and not to_digits(got, places).exact
        if not ok:
            raise TraceMismatch(f"step {i} ({s['label']}): replay gives {render_value(got)}, recorded {s['result']}")
        checked += 1
    return checked, skipped
