from fractions import Fraction
from math import comb

import pytest
from hypothesis import strategies as st

from pbernoulli.series import TruncatedSeries, add, mul


def classical_bernoulli(n_max):
    """B_0..B_n_max from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_1 = -1/2."""
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = sum(comb(n + 1, k) * b[k] for k in range(n))
        b.append(-s / (n + 1))
    return b


def horner_compose(f_coeffs, g):
    """f(g) by Horner's rule, using only mul and add."""
    acc = TruncatedSeries.constant(f_coeffs[-1], g.order)
    for c in reversed(f_coeffs[:-1]):
        acc = add(mul(acc, g), TruncatedSeries.constant(c, g.order))
    return acc


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, order=None, nonzero_constant=False, zero_constant=False):
    if order is None:
        order = draw(st.integers(0, 8))
    coeffs = draw(st.lists(small_fractions, min_size=order + 1, max_size=order + 1))
    if nonzero_constant and not coeffs[0]:
        coeffs[0] = Fraction(draw(st.sampled_from([1, -1, 3, Fraction(1, 2)])))
    if zero_constant:
        coeffs[0] = Fraction(0)
    return TruncatedSeries(coeffs)


@pytest.fixture(scope="session")
def bernoulli_40():
    return classical_bernoulli(40)


_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    name = request.node.name
    _ACCEPTANCE[name] = (False, "did not finish")

    def record(detail):
        _ACCEPTANCE[name] = (True, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
