import pytest

from pbernoulli.identities import (
    check_binomial_ratio,
    check_harmonic_alternating,
    check_harmonic_integral,
    check_vandermonde_exp,
)


@pytest.mark.parametrize("p", [0, 1, 4, 17])
def test_harmonic_alternating(p):
    assert check_harmonic_alternating(p)


@pytest.mark.parametrize("k, s", [(1, 3), (3, 2), (4, 4), (12, 5)])
def test_binomial_ratio(k, s):
    assert check_binomial_ratio(k, s)


def test_binomial_ratio_needs_positive_s():
    with pytest.raises(ValueError):
        check_binomial_ratio(3, 0)


@pytest.mark.parametrize("p, s, order", [(0, 0, 5), (4, 4, 6), (1, 0, 6), (3, 1, 12), (6, 2, 0)])
def test_vandermonde_exp(p, s, order):
    assert check_vandermonde_exp(p, s, order)


def test_vandermonde_detects_wrong_rate(monkeypatch):
    # break the right-hand side and make sure the check notices
    import pbernoulli.identities as ids

    real = ids.exp_scalar_t
    monkeypatch.setattr(ids, "exp_scalar_t", lambda c, n: real(c + 1, n))
    ids._expm1_power.cache_clear()
    try:
        assert not ids.check_vandermonde_exp(3, 1, 5)
    finally:
        ids._expm1_power.cache_clear()


def test_vandermonde_range():
    with pytest.raises(ValueError):
        check_vandermonde_exp(2, 3, 4)


@pytest.mark.parametrize("n", [0, 1, 5, 30])
def test_harmonic_integral(n):
    assert check_harmonic_integral(n)
