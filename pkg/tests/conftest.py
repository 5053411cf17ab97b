from fractions import Fraction

import pytest
from hypothesis import settings

from valdim import IndicatorPoly, RingPresentation, lex_desc
from valdim.dimcerts import DimCertificate

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# the collapse identity in three points: its terms as (exponents in X0,X1,X2, coefficient)
COLLAPSE_TERMS = [((1, 2, 2), 1), ((2, 2, 2), 2), ((0, 4, 2), 3), ((2, 5, 2), 1),
                  ((0, 0, 3), 3), ((0, 1, 3), 2), ((2, 3, 4), 1)]
COLLAPSE = "x0*x1^2*x2^2 + 2*x0^2*x1^2*x2^2 + 3*x1^4*x2^2 + x0^2*x1^5*x2^2 + 3*x2^3 + 2*x1*x2^3 + x0^2*x1^3*x2^4"
# COLLAPSE = x2^2 * COLLAPSE_FACTOR with the factor irreducible over Q
COLLAPSE_FACTOR = "x0*x1^2 + 2*x0^2*x1^2 + 3*x1^4 + x0^2*x1^5 + 3*x2 + 2*x1*x2 + x0^2*x1^3*x2^2"


def collapse_cert(ideal=COLLAPSE, integral=False):
    R = RingPresentation(["x0", "x1", "x2"], [ideal], assume_integral=integral)
    W = IndicatorPoly(R, 3, {e: c for e, c in COLLAPSE_TERMS})
    return DimCertificate(R, [R.var("x0"), R.var("x1"), R.var("x2")], lex_desc(3), W)


@pytest.fixture
def qt():
    return RingPresentation(["t"], assume_integral=True)


@pytest.fixture
def qxy():
    return RingPresentation(["x", "y"], assume_integral=True)


@pytest.fixture
def cross():
    """Q[x,y]/<xy>, reduced but not integral."""
    return RingPresentation(["x", "y"], ["x*y"], assume_reduced=True)


@pytest.fixture
def trivial():
    return RingPresentation(["t"], ["1"], assume_reduced=True, assume_integral=True)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
