from fractions import Fraction

import pytest
from hypothesis import strategies as st

# Reverse of SMT No. 1, as far as legible. Kept as data only: no relation to
# the obverse figure is known.
SMT1_REVERSE = ("1,33,27,30", "40,8,45", "52,30", "8,14")

# Primitive triples tabulated in the text, in printed leg order.
PRINTED_TRIPLES = [
    (3, 4, 5), (5, 12, 13), (7, 24, 25), (8, 15, 17), (9, 40, 41),
    (11, 60, 61), (12, 35, 37), (13, 84, 85), (15, 112, 113), (16, 63, 65),
    (17, 144, 145), (19, 180, 181), (20, 21, 29), (20, 99, 101), (21, 220, 221),
    (23, 264, 265), (24, 143, 145), (25, 312, 313), (27, 364, 365), (28, 45, 53),
    (28, 195, 197), (29, 420, 421), (31, 480, 481), (32, 255, 257), (33, 56, 65),
    (33, 544, 545), (35, 612, 613), (36, 77, 85), (36, 323, 325), (37, 684, 685),
    (39, 80, 89), (39, 760, 761), (40, 399, 401), (41, 840, 841), (43, 924, 925),
]


@st.composite
def rationals(draw, max_num=10**9, max_den=10**6, nonzero=False):
    num = draw(st.integers(-max_num, max_num).filter(lambda n: n != 0 or not nonzero))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)


@pytest.fixture
def smt1_reverse():
    return SMT1_REVERSE


# -- acceptance summary -------------------------------------------------------

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _acceptance:
        terminalreporter.write_line(f"{status}  {doc}")
