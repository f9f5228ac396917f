"""Exact checks of the auxiliary identities behind the closed form.

Each ``check_*`` function evaluates both sides of one identity independently
and compares them with exact equality.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .pbern import harmonic
from .series import TruncatedSeries, exp_scalar_t


def check_harmonic_alternating(p: int) -> bool:
    """``H_p == -sum_{s=1}^{p} (-1)^s C(p, s) / s``."""
    rhs = -sum(
        (Fraction((-1) ** s * comb(p, s), s) for s in range(1, p + 1)), Fraction(0)
    )
    return rhs == harmonic(p)


def check_binomial_ratio(k: int, s: int) -> bool:
    """``sum_{i=1}^{k} C(i, s) / i == C(k, s) / s``."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    lhs = sum((Fraction(comb(i, s), i) for i in range(1, k + 1)), Fraction(0))
    return lhs == Fraction(comb(k, s), s)


def check_vandermonde_exp(p: int, s: int, order: int) -> bool:
    """``sum_k C(p,k) C(k,s) (e^t-1)^{p-k} == C(p,s) e^{(p-s)t}`` through ``t^order``."""
    if not 0 <= s <= p:
        raise ValueError(f"need 0 <= s <= p, got s={s}, p={p}")
    lhs = TruncatedSeries.constant(0, order)
    for k in range(p + 1):
        c = comb(p, k) * comb(k, s)
        if c:
            lhs = lhs + _expm1_power(p - k, order).scale(c)
    rhs = exp_scalar_t(p - s, order).scale(comb(p, s))
    return lhs.coeffs == rhs.coeffs


@lru_cache(maxsize=None)
def _expm1_power(j: int, order: int) -> TruncatedSeries:
    if j == 0:
        return TruncatedSeries.constant(1, order)
    return _expm1_power(j - 1, order) * (exp_scalar_t(1, order) - 1)


def check_harmonic_integral(n: int) -> bool:
    """``H_n == integral_0^1 (1 - x^n)/(1 - x) dx``.

    The integrand is the polynomial ``1 + x + ... + x^{n-1}``; its exact
    antiderivative at 1 is summed term by term.
    """
    integrand = [Fraction(1)] * n
    integral = sum((c / (i + 1) for i, c in enumerate(integrand)), Fraction(0))
    return integral == harmonic(n)
