"""Command-line front end.

    susa calc "sqrt(2,36;15 - 1,40)"        -> 7;30
    susa reciprocal 5                        -> 0;12
    susa triples decompose 30 40 50          -> k=10 m=2 n=1
    susa solve smt19 --f "0;15" --d 40       -> x = 32, y = 24, ...
    susa constants                           -> PASS/FAIL table

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import warnings
from fractions import Fraction

from . import solvers
from .calc import evaluate
from .core import DEFAULT_NOTATION, NotationConfig, is_regular, parse, reciprocal_exact, to_digits, to_significant
from .errors import EmptyRange, InvalidParams, NotExactlySolvable, SusaError, TraceMismatch
from .roots import sqrt_exact, sqrt_heron
from .trace import ProblemResult, render_value, result_to_json, verify_trace, verify_trace_json
from .triples import EuclidParams, Triple, decompose, enumerate_primitives, euclid_generate, is_primitive, is_pythagorean

__all__ = ["run", "main"]

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_PLACES = 6


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# solve: problem table

# name -> (solver, {cli option dest: solver keyword}, fixed keywords)
_PROBLEMS = {
    "smt1": (solvers.solve_smt1, {"s": "s", "half_base": "half_base"}, {}),
    "smt3": (solvers.verify_smt3, {"line": "line"}, {}),
    "pi": (solvers.pi_interpretations, {"area": "S", "inner_d": "inner_d", "wall": "wall", "digits": "places"}, {}),
    "pi-bruins": (solvers.pi_bruins, {}, {}),
    "pi-neugebauer": (solvers.pi_neugebauer, {}, {}),
    "pi-storehouse": (solvers.pi_storehouse, {"area": "S", "inner_d": "inner_d", "wall": "wall", "digits": "places"}, {}),
    "smt15": (
        solvers.solve_smt15,
        {"problem": "problem", "enlarged": "enlarged", "aux": "aux", "ext": "ext", "offset": "offset"},
        {},
    ),
    "smt19": (solvers.solve_smt19, {"f": "f", "d": "d"}, {}),
    "bm85196": (solvers.solve_bm85196, {"l": "l", "h": "h", "slip": "slip", "foot": "foot"}, {}),
    "ybc7289": (solvers.ybc7289_diagonal, {"a": "a", "sqrt2": "sqrt2"}, {}),
}
_ALIASES = {
    "smt3-l29": ("smt3", {"line": "29"}),
    "smt3-l30": ("smt3", {"line": "30"}),
    "smt3-l31": ("smt3", {"line": "31"}),
    "smt3-l32": ("smt3", {"line": "32"}),
    "smt15-p1": ("smt15", {"problem": "P1"}),
    "smt15-p2": ("smt15", {"problem": "P2"}),
    "smt19-p1": ("smt19", {}),
    "bm85196-fwd": ("bm85196", {}),
    "bm85196-inv": ("bm85196", {}),
}
# Paper defaults, written as on the tablets.
_DEFAULTS = {
    "smt1": {"s": "50", "half_base": "30"},
    "smt3": {"line": "29"},
    "smt15": {"problem": "P1", "enlarged": "20", "aux": "30", "ext": "2;30"},
    "smt19": {"f": "0;15", "d": "40"},
    "bm85196": {"l": "0;30", "h": "0;30"},
    "ybc7289": {"a": "1", "sqrt2": "1;25"},
    "pi": {"area": "7;10", "inner_d": "3", "wall": "0;0,50", "digits": "4"},
    "pi-storehouse": {"area": "7;10", "inner_d": "3", "wall": "0;0,50", "digits": "4"},
}
_NON_NUMERIC = {"line", "problem"}
_INTEGER = {"digits", "heron"}
_SOLVE_OPTIONS = [
    ("--s", "s", "equal side of the triangle (smt1)"),
    ("--half-base", "half_base", "half of the transversal (smt1)"),
    ("--line", "line", "line 29-32 (smt3)"),
    ("--problem", "problem", "P1 or P2 (smt15)"),
    ("--enlarged", "enlarged", "width of the enlarged gate (smt15)"),
    ("--aux", "aux", "second number of the opening step (smt15)"),
    ("--ext", "ext", "extension on each side (smt15)"),
    ("--offset", "offset", "override the leg subtracted from 12;30 (smt15)"),
    ("--f", "f", "fraction by which the width falls short (smt19)"),
    ("--d", "d", "diagonal (smt19)"),
    ("--l", "l", "timber length (bm85196)"),
    ("--h", "h", "wall height (bm85196)"),
    ("--slip", "slip", "how far the top went down (bm85196 forward)"),
    ("--foot", "foot", "distance of the foot from the wall (bm85196 inverse)"),
    ("--a", "a", "side of the square (ybc7289)"),
    ("--sqrt2", "sqrt2", "value used for sqrt(2) (ybc7289)"),
    ("--area", "area", "storehouse area S in sar (pi)"),
    ("--inner-d", "inner_d", "inner diameter (pi)"),
    ("--wall", "wall", "wall thickness (pi)"),
    ("--digits", "digits", "significant digits of the storehouse rendering (pi)"),
]


def _resolve_problem(name: str, args) -> tuple[str, dict]:
    key = name.lower().replace("_", "-")
    preset = {}
    if key in _ALIASES:
        key, preset = _ALIASES[key]
        if name.lower().replace("_", "-") == "bm85196-inv" and getattr(args, "foot") is None:
            raise _UsageError("solve bm85196-inv needs --foot")
    if key not in _PROBLEMS:
        known = sorted(set(_PROBLEMS) | set(_ALIASES))
        raise _UsageError(f"unknown problem {name!r}; choose from {', '.join(known)}")
    return key, preset


def _solve(args, cfg: NotationConfig, out: io.StringIO) -> int:
    key, preset = _resolve_problem(args.problem_id, args)
    solver, option_map, fixed = _PROBLEMS[key]
    given = {dest: getattr(args, dest) for _, dest, _ in _SOLVE_OPTIONS if getattr(args, dest) is not None}
    stray = sorted(set(given) - set(option_map))
    if stray:
        raise _UsageError(f"option(s) {', '.join('--' + s.replace('_', '-') for s in stray)} do not apply to {key}")

    raw = dict(_DEFAULTS.get(key, {}))
    if key == "bm85196" and "foot" not in given:
        raw.setdefault("slip", "0;6")
    raw.update(preset)
    raw.update(given)
    kwargs = dict(fixed)
    for dest, text in raw.items():
        if dest in _NON_NUMERIC:
            kwargs[option_map[dest]] = text
        elif dest in _INTEGER:
            kwargs[option_map[dest]] = _int_arg(text, dest)
        else:
            kwargs[option_map[dest]] = parse(text, cfg)
    if args.heron is not None:
        if "heron_iterations" not in solver.__code__.co_varnames:
            raise _UsageError(f"--heron does not apply to {key}")
        kwargs["heron_iterations"] = args.heron

    result = solver(**kwargs)
    places = args.places if args.places is not None else DEFAULT_PLACES
    doc = result_to_json(result, places)
    if args.json:
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_render_result(result, places, cfg))

    if args.verify_trace:
        n = verify_trace(result.trace)
        checked, skipped = verify_trace_json(doc)
        if not args.json:
            out.write(f"trace verified: {n} steps replayed exactly, {checked} re-read from digits")
            out.write(f" ({skipped} with truncated operands)\n" if skipped else "\n")
    return EXIT_OK


def _int_arg(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"--{name} expects an integer, got {text!r}") from None


def _show(x: Fraction, places: int, cfg: NotationConfig) -> str:
    d = to_digits(x, places, cfg)
    return d.render(cfg) if d.exact else d.render(cfg) + "..."


def _render_result(result: ProblemResult, places: int, cfg: NotationConfig) -> str:
    lines = [result.problem_id.value]
    for s in result.trace.steps:
        lines.append(f"{s.index:>3}. {s.label}: {_show(s.result, places, cfg)}")
    for name, v in result.values.items():
        lines.append(f"{name} = {_show(v, places, cfg)}")
    for name, text in result.display.items():
        lines.append(f"{name} ~ {text}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# other verbs


def _value_json(x: Fraction, places: int, cfg: NotationConfig) -> dict:
    d = to_digits(x, places, cfg)
    return {"num": str(x.numerator), "den": str(x.denominator), "sex": d.render(cfg), "exact": d.exact}


def _emit_value(args, x: Fraction, cfg: NotationConfig, out, **extra) -> None:
    places = args.places if args.places is not None else DEFAULT_PLACES
    if args.json:
        doc = _value_json(x, places, cfg)
        doc.update(extra)
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(_show(x, places, cfg) + "\n")


def _calc(args, cfg, out) -> int:
    _emit_value(args, evaluate(" ".join(args.expression), cfg), cfg, out)
    return EXIT_OK


def _convert(args, cfg, out) -> int:
    x = parse(args.value, cfg)
    places = args.places if args.places is not None else DEFAULT_PLACES
    if args.json:
        out.write(json.dumps(_value_json(x, places, cfg)) + "\n")
        return EXIT_OK
    out.write(f"sexagesimal: {_show(x, places, cfg)}\n")
    out.write(f"fraction: {x.numerator}/{x.denominator}\n")
    out.write(f"decimal: {_decimal(x, places)}\n")
    return EXIT_OK


def _decimal(x: Fraction, places: int) -> str:
    neg = x < 0
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    digits = []
    for _ in range(places):
        if not rem:
            break
        d, rem = divmod(rem * 10, x.denominator)
        digits.append(str(d))
    text = str(whole) + ("." + "".join(digits) if digits else "")
    return ("-" if neg else "") + text + ("..." if rem else "")


def _reciprocal(args, cfg, out) -> int:
    x = parse(args.value, cfg)
    _emit_value(args, reciprocal_exact(x), cfg, out, regular=is_regular(x))
    return EXIT_OK


def _sqrt(args, cfg, out) -> int:
    x = parse(args.value, cfg)
    root = sqrt_exact(x)
    if root is None:
        if args.heron is None:
            raise NotExactlySolvable(f"{render_value(x)} is not the square of a rational; use --heron N")
        seed = parse(args.seed, cfg) if args.seed is not None else None
        root = sqrt_heron(x, seed, args.heron)
    _emit_value(args, root, cfg, out)
    return EXIT_OK


def _triples(args, cfg, out) -> int:
    sub = args.sub
    if sub == "gen":
        t = euclid_generate(EuclidParams(args.m, args.n, args.k))
        if args.json:
            out.write(json.dumps({"a": t.a, "b": t.b, "c": t.c, "primitive": is_primitive(t)}) + "\n")
        else:
            out.write(f"{t} {'primitive' if is_primitive(t) else 'not primitive'}\n")
    elif sub == "check":
        a, b, c = args.a, args.b, args.c
        if min(a, b, c) < 1:
            raise InvalidParams("sides must be positive integers")
        pyth = is_pythagorean(a, b, c)
        prim = pyth and is_primitive(Triple(a, b, c))
        if args.json:
            out.write(json.dumps({"pythagorean": pyth, "primitive": prim}) + "\n")
        elif not pyth:
            out.write("not pythagorean\n")
        else:
            out.write(f"pythagorean {'primitive' if prim else 'not primitive'}\n")
    elif sub == "decompose":
        p = decompose(Triple(args.a, args.b, args.c))
        if args.json:
            out.write(json.dumps({"k": p.k, "m": p.m, "n": p.n}) + "\n")
        else:
            out.write(f"{p}\n")
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", EmptyRange)
            rows = enumerate_primitives(args.c_max)
        for w in caught:
            sys.stderr.write(f"EmptyRange: {w.message}\n")
        if args.json:
            out.write(json.dumps([[t.a, t.b, t.c] for t in rows]) + "\n")
        else:
            out.writelines(f"{t}\n" for t in rows)
    return EXIT_OK


# expected values as printed in the text
_CONSTANT_ROWS = [
    ("SMT3 L29 equilateral height", "0;52,30"),
    ("SMT3 L30 right triangle", "0;57,36"),
    ("SMT3 L31 diagonal of a square", "1;25"),
    ("SMT3 L32 diagonal of a rectangle", "1;15 -> 1, 0;45"),
    ("pi Bruins", "3;7,30"),
    ("pi Neugebauer", "3;7,30"),
]
_STOREHOUSE_PRINTED = "3;7,37,14"


def _constants(args, cfg, out) -> int:
    l29, l30, l31, l32 = (solvers.verify_smt3(n) for n in (29, 30, 31, 32))
    pis = solvers.pi_interpretations()
    computed = [
        (str(to_digits(l29["height"])), True),
        (str(to_digits(l30["constant"])), l30["identity_sum"] == 1),
        (str(to_digits(l31["constant"])), l31["squared_error"] == Fraction(1, 144)),
        (f"{to_digits(l32['diagonal'])} -> {to_digits(l32['length'])}, {to_digits(l32['width'])}", True),
        (str(to_digits(pis["bruins"])), True),
        (str(to_digits(pis["neugebauer"])), True),
    ]
    rows = []
    for (line, expected), (got, extra_ok) in zip(_CONSTANT_ROWS, computed):
        rows.append({"line": line, "expected": expected, "computed": got, "pass": got == expected and extra_ok})

    printed = parse(_STOREHOUSE_PRINTED)
    if args.places is None:
        got = str(to_significant(pis["storehouse"], 4, cfg))
        expected = _STOREHOUSE_PRINTED
    else:
        # explicit --places: both sides cut to that many fractional digits
        got = to_digits(pis["storehouse"], args.places, cfg).render(cfg)
        expected = to_digits(printed, args.places, cfg).render(cfg)
    rows.append({"line": "pi storehouse 4S/D^2", "expected": expected, "computed": got, "pass": got == expected})

    if args.json:
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        width = max(len(r["line"]) for r in rows)
        for r in rows:
            mark = "PASS" if r["pass"] else "FAIL"
            out.write(f"{mark}  {r['line']:<{width}}  expected {r['expected']:<16} computed {r['computed']}\n")
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--places", type=int, default=None, help=f"fractional base-60 places (default {DEFAULT_PLACES})")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--round", action="store_true", help="round the last place instead of truncating")

    parser = _Parser(prog="susa", description="Exact sexagesimal arithmetic and tablet replays.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("calc", parents=[common], help="evaluate an expression")
    p.add_argument("expression", nargs="+")
    p.set_defaults(handler=_calc)

    p = sub.add_parser("convert", parents=[common], help="show a value as sexagesimal, fraction and decimal")
    p.add_argument("value")
    p.set_defaults(handler=_convert)

    p = sub.add_parser("reciprocal", parents=[common], help="reciprocal (igi) of a value")
    p.add_argument("value")
    p.set_defaults(handler=_reciprocal)

    p = sub.add_parser("sqrt", parents=[common], help="exact square root, or Heron steps with --heron")
    p.add_argument("value")
    p.add_argument("--heron", type=int, metavar="N")
    p.add_argument("--seed")
    p.set_defaults(handler=_sqrt)

    p = sub.add_parser("triples", parents=[common], help="Pythagorean triples")
    tsub = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    g = tsub.add_parser("gen", parents=[common])
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g.add_argument("k", type=int, nargs="?", default=1)
    for name in ("check", "decompose"):
        c = tsub.add_parser(name, parents=[common])
        for side in "abc":
            c.add_argument(side, type=int)
    lst = tsub.add_parser("list", parents=[common])
    lst.add_argument("c_max", type=int)
    p.set_defaults(handler=_triples)

    p = sub.add_parser("solve", parents=[common], help="replay a tablet problem")
    p.add_argument("problem_id")
    for flag, dest, text in _SOLVE_OPTIONS:
        p.add_argument(flag, dest=dest, help=text)
    p.add_argument("--heron", type=int, metavar="N", help="allow N Heron steps where a root is not exact")
    p.add_argument("--verify-trace", action="store_true", help="replay every step and check it")
    p.set_defaults(handler=_solve)

    p = sub.add_parser("constants", parents=[common], help="check the SMT No. 3 constants and pi values")
    p.set_defaults(handler=_constants)
    return parser


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = _dispatch(list(argv), out)
    return code, out.getvalue(), err.getvalue()


def _dispatch(argv: list[str], out) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = NotationConfig(rounding="nearest") if args.round else DEFAULT_NOTATION
        if args.places is not None and args.places < 0:
            raise _UsageError("--places must be >= 0")
        return args.handler(args, cfg, out)
    except _UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except TraceMismatch as exc:
        sys.stderr.write(f"TraceMismatch: {exc}\n")
        return EXIT_VERIFY
    except SusaError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
