"""Exit criteria.  Each test covers one criterion at its stated tolerance and
records a PASS/FAIL line shown in the ``acceptance criteria`` section of the
pytest summary."""
import time
from fractions import Fraction

from pbernoulli.identities import (
    check_binomial_ratio,
    check_harmonic_alternating,
    check_harmonic_integral,
    check_vandermonde_exp,
)
from pbernoulli.pbern import (
    closed_form_laurent,
    pbern_closed_form,
    pbern_hypergeometric,
    pbern_polynomial,
    pbern_table,
)
from pbernoulli.quadrature import (
    DEFAULT_T_SAMPLES,
    egf_partial_sum,
    closed_form_eval,
    euler_integral,
)
from pbernoulli import cli
from pbernoulli.tableio import table_from_csv, table_from_json, table_to_csv, table_to_json

N_MAX = 40
P_MAX = 12
TOL = 1e-8


def test_1_methods_agree_exactly(criterion):
    start = time.perf_counter()
    bad = [
        p for p in range(P_MAX + 1)
        if pbern_hypergeometric(N_MAX, p) != pbern_closed_form(N_MAX, p)
    ]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 10
    criterion(f"n<={N_MAX}, p<={P_MAX} exact, {elapsed:.2f}s")


def test_2_pole_cancellation(criterion):
    for p in range(P_MAX + 1):
        laurent = closed_form_laurent(N_MAX, p)
        assert all(laurent.coefficient(e) == 0 for e in range(-(p + 1), 0)), p
    criterion(f"exponents [-(p+1), -1] vanish for p<={P_MAX}")


def test_3_classical_limit(criterion, bernoulli_40):
    column = pbern_hypergeometric(N_MAX, 0)
    assert column == bernoulli_40
    assert all(column[2 * k + 1] == 0 for k in range(1, N_MAX // 2))
    criterion(f"p=0 column equals recurrence oracle for n<={N_MAX}")


def test_4_integral_cross_check(criterion):
    start = time.perf_counter()
    worst_series = worst_closed = 0.0
    for p in range(9):
        coeffs = pbern_hypergeometric(39, p)
        for t in DEFAULT_T_SAMPLES:
            integral = euler_integral(p, t)
            worst_series = max(worst_series, abs(integral - egf_partial_sum(coeffs, t, 40)))
            worst_closed = max(worst_closed, abs(integral - closed_form_eval(p, t)))
    elapsed = time.perf_counter() - start
    assert worst_series < TOL
    assert worst_closed < TOL
    assert elapsed < 5
    criterion(
        f"max |int-series|={worst_series:.1e}, max |int-closed|={worst_closed:.1e}, "
        f"{elapsed:.2f}s"
    )


def test_5_identity_suites(criterion):
    assert all(check_harmonic_alternating(p) for p in range(31))
    assert all(check_binomial_ratio(k, s) for k in range(31) for s in range(1, 31))
    assert all(check_vandermonde_exp(p, s, 30) for p in range(11) for s in range(p + 1))
    assert all(check_harmonic_integral(n) for n in range(31))
    criterion("all four identity suites exact")


def test_6_polynomial_remark(criterion):
    for p in range(9):
        numbers = pbern_hypergeometric(20, p)
        polys = pbern_polynomial(20, p)
        assert [poly(Fraction(0)) for poly in polys] == numbers
    assert pbern_polynomial(1, 0)[1].coeffs == (Fraction(-1, 2), 1)
    criterion("B_{n,p}(0) = B_{n,p} for n<=20, p<=8; B_{1,0}(x) = x - 1/2")


def test_7_serialization_round_trip(criterion, tmp_path):
    table = pbern_table(20, 8)
    assert table_from_csv(table_to_csv(table)) == table
    assert table_from_json(table_to_json(table)) == table
    for fmt in ("csv", "json"):
        blobs = []
        for run in range(2):
            path = tmp_path / f"{run}.{fmt}"
            assert cli.cmd_table(20, 8, fmt, str(path)) == 0
            blobs.append(path.read_bytes())
        assert blobs[0] == blobs[1]
        parse = table_from_csv if fmt == "csv" else table_from_json
        assert parse(blobs[0].decode("utf-8")) == table
    criterion("CSV and JSON re-parse exactly; repeated runs byte-identical")
