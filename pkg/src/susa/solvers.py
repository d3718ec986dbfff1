"""Parameterized replays of the worked tablet computations.

Every solver builds a :class:`~susa.trace.StepTrace` that follows the
scribe's sequence of operations ("square 12;30, you see 2,36;15") and
returns a :class:`~susa.trace.ProblemResult`.  Defaults reproduce the
numbers written on the tablets; other inputs run the same procedure.

Square roots must come out exact unless ``heron_iterations`` is given, in
which case an inexact root is replaced by that many averaging steps from
the seed (x + 1) / 2.  Lengths are plain rationals; units (nindan, kùš)
only appear in labels.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Numeric, as_exact, to_significant
from .errors import AmbiguousQuery, DomainError, NoRealChord, NoSolution, NotExactlySolvable, TraceMismatch
from .roots import NamedConstant, default_seed, sqrt_exact
from .trace import ProblemId, ProblemResult, TraceBuilder
from .triples import sides_from_diagonal_constant

__all__ = [
    "solve_smt1",
    "verify_smt3",
    "pi_bruins",
    "pi_neugebauer",
    "pi_storehouse",
    "pi_interpretations",
    "solve_smt15",
    "solve_smt19",
    "solve_bm85196",
    "ybc7289_diagonal",
]

F = Fraction


def _root(tb: TraceBuilder, label: str, x: Fraction, heron_iterations: int | None) -> Fraction:
    if x < 0:
        raise NoSolution(f"negative radicand {x}")
    if sqrt_exact(x) is not None:
        return tb.step(label, "sqrt", x)
    if heron_iterations is None:
        raise NotExactlySolvable(f"{x} is not the square of a rational; the exact procedure stops here")
    return tb.step(label + " (approximated by {2} Heron steps from {1})", "heron", x, default_seed(x), heron_iterations)


def _positive(**kwargs) -> None:
    for name, v in kwargs.items():
        if v <= 0:
            raise DomainError(f"{name} must be positive, got {v}")


def solve_smt1(s: Numeric = 50, half_base: Numeric = 30, heron_iterations: int | None = None) -> ProblemResult:
    """Isosceles triangle with equal sides ``s`` and half-base ``half_base`` in its circumcircle.

    Returns the height (40 on the tablet), the circumradius (31;15) and the
    distance from the centre to the base (8;45).
    """
    s, hb = as_exact(s), as_exact(half_base)
    _positive(half_base=hb)
    if not s > hb:
        raise DomainError(f"side {s} must exceed half the base {hb}")

    tb = TraceBuilder(ProblemId.SMT1)
    s2 = tb.step("square {0}, the side", "square", s)
    b2 = tb.step("square {0}, half the transversal", "square", hb)
    diff = tb.step("subtract {1} from {0}", "sub", s2, b2)
    height = _root(tb, "the square root of {0} is the height", diff, heron_iterations)
    h2 = tb.step("square the height {0}", "square", height)
    total = tb.step("add {0} and {1}", "add", h2, b2)
    twice = tb.step("multiply the height {0} by {1}", "mul", height, 2)
    recip = tb.step("make the reciprocal of {0}", "recip", twice)
    radius = tb.step("multiply {0} by {1}: the radius", "mul", recip, total)
    apex = tb.step("subtract the radius {1} from {0}", "sub", height, radius)
    return tb.result({"height": height, "radius": radius, "apex": apex})


def _smt3_line(line) -> int:
    text = str(line).upper().lstrip("L")
    if text not in ("29", "30", "31", "32"):
        raise DomainError(f"SMT No. 3 line must be one of 29..32, got {line!r}")
    return int(text)


def verify_smt3(line) -> ProblemResult:
    """Recompute one of the geometric constants of lines 29-32."""
    n = _smt3_line(line)
    tb = TraceBuilder(ProblemId[f"SMT3_L{n}"])
    if n == 29:
        root3 = tb.step("average {1} and {0}/{1} once: sqrt(3) is about {r}", "heron", 3, 2, 1)
        height = tb.step("halve {0}: the height of the unit equilateral triangle", "half", root3)
        assert root3 == NamedConstant.SQRT3.value
        return tb.result({"height": height, "sqrt3": root3})
    if n == 30:
        # The line reads 57,36 = 0;57,36 = 24/25; the printed interpretation calls it 7/25.
        const = tb.step("0;57,36 is 24/25 (the printed reading 7/25 is the other side)", "div", 24, 25)
        comp = tb.step("the other side is {0}/{1}", "div", 7, 25)
        comp2 = tb.step("square {0}", "square", comp)
        const2 = tb.step("square {0}", "square", const)
        total = tb.step("add {0} and {1}: the hypotenuse squared", "add", comp2, const2)
        return tb.result({"constant": const, "complement": comp, "identity_sum": total})
    if n == 31:
        coarse = tb.step("the common value {0} for sqrt(2)", "const", NamedConstant.SQRT2_COARSE.value)
        fine = tb.step("average {1} and {0}/{1} once: {r}", "heron", 2, coarse, 1)
        fine2 = tb.step("square {0}", "square", fine)
        err = tb.step("subtract {1} from {0}: the excess", "sub", fine2, 2)
        return tb.result({"constant": fine, "squared_error": err, "coarse": coarse})
    diag = tb.step("the constant of the diagonal {0}", "const", F(5, 4))
    d2 = tb.step("square {0}", "square", diag)
    one = tb.step("square the length {0}", "square", 1)
    diff = tb.step("subtract {1} from {0}", "sub", d2, one)
    width = tb.step("the square root of {0} is the width", "sqrt", diff)
    if sides_from_diagonal_constant(diag) != (one, width):
        raise TraceMismatch("triple decomposition disagrees with the direct computation")
    return tb.result({"diagonal": diag, "length": one, "width": width})


def pi_bruins() -> ProblemResult:
    """pi from S = (0;57,36) c^2/12 set against S = c^2/(4 pi)."""
    tb = TraceBuilder(ProblemId.PI_BRUINS)
    const = tb.step("the constant {0}", "const", F(24, 25))
    per = tb.step("multiply {0} by {1}: area per squared circumference", "mul", const, F(1, 12))
    four = tb.step("multiply {0} by {1}", "mul", per, 4)
    pi = tb.step("make the reciprocal of {0}: pi", "recip", four)
    return tb.result({"bruins": pi})


def pi_neugebauer() -> ProblemResult:
    """pi from hexagon/circle perimeter ratio 3/pi = 0;57,36."""
    tb = TraceBuilder(ProblemId.PI_NEUGEBAUER)
    const = tb.step("the constant {0}", "const", F(24, 25))
    inv = tb.step("make the reciprocal of {0}", "recip", const)
    pi = tb.step("multiply {0} by {1}: pi", "mul", 3, inv)
    return tb.result({"neugebauer": pi})


def pi_storehouse(
    S: Numeric = F(43, 6), inner_d: Numeric = 3, wall: Numeric = F(1, 72), places: int = 4
) -> ProblemResult:
    """pi = 4S / D^2 for a round storehouse of area S and outer diameter D.

    ``places`` counts significant base-60 digits, the precision at which the
    reciprocal 0;6,32,41,39 and the result 3;7,37,14 are written out.  Both
    are kept exact in the trace; multiplying 28;40 by the cut-off reciprocal
    would give 3;7,37,13,58 instead.
    """
    S, inner_d, wall = as_exact(S), as_exact(inner_d), as_exact(wall)
    _positive(S=S, inner_d=inner_d, wall=wall)
    if places < 1:
        raise DomainError("places must be >= 1")
    tb = TraceBuilder(ProblemId.PI_STOREHOUSE)
    both = tb.step("twice the wall {0} nindan", "mul", wall, 2)
    D = tb.step("add {1} to the inner diameter {0}: the outer diameter", "add", inner_d, both)
    D2 = tb.step("square {0}", "square", D)
    S4 = tb.step("multiply the area {0} by {1}", "mul", S, 4)
    recip = tb.step("make the reciprocal of {0}", "recip", D2)
    pi = tb.step("multiply {0} by {1}: pi", "mul", S4, recip)
    display = {
        "reciprocal": str(to_significant(recip, places)),
        "storehouse": str(to_significant(pi, places)),
    }
    return tb.result({"diameter": D, "diameter_squared": D2, "four_area": S4, "storehouse": pi}, display)


def pi_interpretations(
    S: Numeric = F(43, 6), inner_d: Numeric = 3, wall: Numeric = F(1, 72), places: int = 4
) -> ProblemResult:
    """All three readings of pi in one result: bruins, neugebauer, storehouse."""
    parts = [pi_bruins(), pi_neugebauer(), pi_storehouse(S, inner_d, wall, places)]
    tb = TraceBuilder(ProblemId.PI_STOREHOUSE)
    values = {}
    for part, tag in zip(parts, ("Bruins", "Neugebauer", "storehouse")):
        tb.extend(part.trace, prefix=f"[{tag}] ")
        values.update(part.values)
    return tb.result(
        {k: values[k] for k in ("bruins", "neugebauer", "storehouse")}, parts[2].display
    )


def solve_smt15(
    problem: str = "P1",
    enlarged: Numeric = 20,
    aux: Numeric = 30,
    ext: Numeric = F(5, 2),
    offset: Numeric | None = None,
    heron_iterations: int | None = None,
) -> ProblemResult:
    """Width of the gate in problems 1 and 2 (15 and 20 kùš on the tablet).

    The opening computation (halve 20, halve 30, ... add 2;30, you see 12;30)
    is replayed literally; only the final Pythagorean step has a clear
    geometric reading.  ``offset`` overrides the leg subtracted from 12;30.
    """
    p = str(problem).upper()
    if p not in ("P1", "P2", "1", "2"):
        raise DomainError(f"problem must be P1 or P2, got {problem!r}")
    p = "P" + p[-1]
    enlarged, aux, ext = as_exact(enlarged), as_exact(aux), as_exact(ext)
    _positive(enlarged=enlarged, aux=aux, ext=ext)

    tb = TraceBuilder(ProblemId[f"SMT15_{p}"])
    half_enl = tb.step("halve {0} of the enlargement", "half", enlarged)
    half_aux = tb.step("halve {0}", "half", aux)
    rest = tb.step("subtract {1} from {0} of the enlargement", "sub", enlarged, half_aux)
    sq = tb.step("square {0}", "square", half_enl)
    recip = tb.step("make the reciprocal of {0}", "recip", rest)
    prod = tb.step("multiply {0} by {1}", "mul", recip, sq)
    half = tb.step("halve {0}", "half", prod)
    radius = tb.step("add {0} to {1}", "add", ext, half)

    if offset is not None:
        off = tb.step("take {0} as the leg", "const", offset)
    elif p == "P1":
        off = tb.step("subtract {1} from {0}", "sub", radius, ext)
    else:
        both = tb.step("add the first {0} and the second {1} together", "add", ext, ext)
        off = tb.step("subtract {1} from {0}", "sub", radius, both)
    if off < 0:
        raise DomainError(f"offset {off} is negative")
    if radius < off:
        raise NoRealChord(f"offset {off} exceeds {radius}; no chord")

    r2 = tb.step("square {0}", "square", radius)
    o2 = tb.step("square {0}", "square", off)
    diff = tb.step("subtract {1} from {0}", "sub", r2, o2)
    half_width = _root(tb, "the square root of {0}", diff, heron_iterations)
    width = tb.step("multiply {0} by {1}: the space between", "mul", half_width, 2)
    return tb.result({"radius_like": radius, "offset": off, "half_width": half_width, "width": width})


def solve_smt19(f: Numeric = F(1, 4), d: Numeric = 40, heron_iterations: int | None = None) -> ProblemResult:
    """Length x and width y = (1 - f) x of the rectangle with diagonal d."""
    f, d = as_exact(f), as_exact(d)
    if not 0 < f < 1:
        raise DomainError(f"fraction must lie strictly between 0 and 1, got {f}")
    _positive(d=d)

    tb = TraceBuilder(ProblemId.SMT19_P1)
    one = tb.step("put down {0} as the length", "const", 1)
    w = tb.step("subtract {1} from {0}", "sub", one, f)
    one2 = tb.step("square {0} of the length", "square", one)
    w2 = tb.step("square {0} of the width", "square", w)
    total = tb.step("add {0} and {1} together", "add", one2, w2)
    coeff = _root(tb, "the square root of {0}", total, heron_iterations)
    recip = tb.step("make the reciprocal of {0} of the diagonal", "recip", coeff)
    x0 = tb.step("multiply {0} by {1} of the diagonal", "mul", recip, d)
    x = tb.step("multiply {0} by {1} of the length: the length", "mul", x0, one)
    y = tb.step("multiply {0} by {1} of the width: the width", "mul", x0, w)
    x2 = tb.step("square {0}", "square", x)
    y2 = tb.step("square {0}", "square", y)
    d2 = tb.step("add {0} and {1}", "add", x2, y2)
    diag = _root(tb, "the square root of {0} is the diagonal", d2, heron_iterations)
    if heron_iterations is None and diag != d:
        raise TraceMismatch(f"closing check gives diagonal {diag}, expected {d}")
    return tb.result({"x": x, "y": y, "coefficient": coeff, "diagonal": diag})


def solve_bm85196(
    l: Numeric = F(1, 2),
    h: Numeric = F(1, 2),
    slip: Numeric | None = None,
    foot: Numeric | None = None,
    heron_iterations: int | None = None,
) -> ProblemResult:
    """Timber of length ``l`` against a wall of height ``h``.

    Give ``slip`` (how far the top went down) to get the distance of the foot
    from the wall, or ``foot`` to get the slip back.
    """
    if (slip is None) == (foot is None):
        raise AmbiguousQuery("give exactly one of slip or foot")
    l, h = as_exact(l), as_exact(h)
    _positive(l=l, h=h)
    if h > l:
        raise DomainError(f"wall height {h} exceeds timber length {l}")

    if slip is not None:
        slip = as_exact(slip)
        if not 0 <= slip < h:
            raise DomainError(f"slip must satisfy 0 <= slip < {h}, got {slip}")
        tb = TraceBuilder(ProblemId.BM85196_FWD)
        l2 = tb.step("square {0}", "square", l)
        top = tb.step("subtract {1} from {0}", "sub", h, slip)
        top2 = tb.step("square {0}", "square", top)
        rad = tb.step("subtract {1} from {0}", "sub", l2, top2)
        d = _root(tb, "the square root of {0}: the distance from the wall", rad, heron_iterations)
        return tb.result({"foot": d, "height_after": top})

    foot = as_exact(foot)
    if not 0 < foot <= l:
        raise DomainError(f"foot distance must satisfy 0 < foot <= {l}, got {foot}")
    tb = TraceBuilder(ProblemId.BM85196_INV)
    f2 = tb.step("square {0}", "square", foot)
    l2 = tb.step("square {0}", "square", l)
    rad = tb.step("subtract {1} from {0}", "sub", l2, f2)
    top = _root(tb, "the square root of {0}", rad, heron_iterations)
    if top > h:
        raise NoSolution(f"the timber would reach {top}, above the wall top {h}")
    went_down = tb.step("subtract {1} from {0}: how far it went down", "sub", h, top)
    return tb.result({"slip": went_down, "height_after": top})


def ybc7289_diagonal(a: Numeric = 1, sqrt2: Numeric = NamedConstant.SQRT2_FINE.value) -> ProblemResult:
    """Diagonal a * sqrt(2) of a square, with the sqrt(2) value supplied by the caller."""
    a, sqrt2 = as_exact(a), as_exact(sqrt2)
    _positive(a=a, sqrt2=sqrt2)
    tb = TraceBuilder(ProblemId.YBC7289)
    c = tb.step("take {0} for the diagonal of the unit square", "const", sqrt2)
    diag = tb.step("multiply the side {0} by {1}", "mul", a, c)
    return tb.result({"diagonal": diag})
