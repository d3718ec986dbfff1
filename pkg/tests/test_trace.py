import copy
import dataclasses
from fractions import Fraction as F

import jsonschema
import pytest

from susa.errors import NotExactlySolvable, TraceMismatch
from susa.solvers import pi_interpretations, solve_bm85196, solve_smt1, solve_smt15, solve_smt19
from susa.trace import (
    TRACE_SCHEMA,
    ProblemId,
    ProblemResult,
    Step,
    StepTrace,
    TraceBuilder,
    render_value,
    result_to_json,
    verify_trace,
    verify_trace_json,
)


def test_render_value():
    assert render_value(F(125, 4)) == "31;15"
    assert render_value(F(1, 7), 3) == "0;8,34,17..."
    assert render_value(F(1, 60**9)) == "0;" + ",".join(["0"] * 8 + ["1"])


def test_builder_labels():
    tb = TraceBuilder(ProblemId.SMT19_P1)
    r = tb.step("square {0}, you see {r}", "square", F(3, 4))
    assert r == F(9, 16)
    assert tb.build().steps[0].label == "square 0;45, you see 0;33,45"


def test_trace_indices_contiguous():
    s = Step(2, "x", "const", (F(1),), F(1))
    with pytest.raises(ValueError):
        StepTrace(ProblemId.SMT1, (s,))


def test_result_values_come_from_steps():
    tb = TraceBuilder(ProblemId.SMT1)
    tb.step("one", "const", 1)
    with pytest.raises(ValueError):
        tb.result({"x": F(2)})


def test_tampered_trace_is_caught():
    r = solve_smt1()
    steps = list(r.trace.steps)
    steps[3] = dataclasses.replace(steps[3], result=steps[3].result + 1)
    with pytest.raises(TraceMismatch):
        verify_trace(StepTrace(r.problem_id, tuple(steps)))


def test_wrong_arity_is_caught():
    bad = StepTrace(ProblemId.SMT1, (Step(1, "x", "add", (F(1),), F(1)),))
    with pytest.raises(TraceMismatch):
        verify_trace(bad)


def test_sqrt_op_refuses_irrational():
    tb = TraceBuilder(ProblemId.SMT1)
    with pytest.raises(NotExactlySolvable):
        tb.step("root", "sqrt", 2)


def test_heron_fallback_is_replayable():
    r = solve_smt19(F(1, 2), 7, heron_iterations=3)
    assert any(s.op == "heron" for s in r.trace)
    assert verify_trace(r.trace) == len(r.trace)


RUNS = [
    solve_smt1,
    lambda: solve_smt15("P1"),
    lambda: solve_smt15("P2"),
    solve_smt19,
    lambda: solve_bm85196(slip=F(1, 10)),
    lambda: solve_bm85196(foot=F(3, 10)),
]


@pytest.mark.parametrize("run", RUNS)
def test_json_round_trip(run):
    r = run()
    obj = result_to_json(r)
    jsonschema.validate(obj, TRACE_SCHEMA)
    checked, skipped = verify_trace_json(obj)
    assert (checked, skipped) == (len(r.trace), 0)
    for name, v in r.values.items():
        assert F(int(obj["values"][name]["num"]), int(obj["values"][name]["den"])) == v


def test_json_skips_truncated_operands():
    obj = result_to_json(pi_interpretations())
    checked, skipped = verify_trace_json(obj)
    assert skipped == 1
    assert checked + skipped == len(obj["steps"])
    assert obj["values"]["storehouse"]["sex"].endswith("...")


def test_json_tampering_detected():
    obj = result_to_json(solve_smt19())
    bad = copy.deepcopy(obj)
    bad["steps"][1]["result"] = "0;46"
    with pytest.raises(TraceMismatch):
        verify_trace_json(bad)
    bad = copy.deepcopy(obj)
    bad["steps"][1]["index"] = 7
    with pytest.raises(TraceMismatch):
        verify_trace_json(bad)
    bad = copy.deepcopy(obj)
    del bad["values"]
    with pytest.raises(jsonschema.ValidationError):
        verify_trace_json(bad)


def test_problem_result_lookup():
    r = solve_smt1()
    assert isinstance(r, ProblemResult)
    assert r["height"] == 40
    assert r.problem_id is ProblemId.SMT1
    assert r.trace.lines()[0].strip().startswith("1. square 50")
