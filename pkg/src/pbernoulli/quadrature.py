"""Floating-point cross-check of the p-Bernoulli generating function.

The generating function at a real ``t`` is computed three ways: from the
Euler-type integral ``(p+1) * int_0^1 (1-x)^p / (1 - (1-e^t) x) dx`` by
adaptive Gauss-Legendre quadrature, from a partial sum of the exact
coefficients, and from the closed form evaluated directly.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .pbern import harmonic, pbern_hypergeometric

__all__ = [
    "QuadratureError",
    "EvalReport",
    "adaptive_gauss_legendre",
    "euler_integral",
    "egf_partial_sum",
    "closed_form_eval",
    "cross_validate",
    "DEFAULT_T_SAMPLES",
    "THRESHOLD",
]

THRESHOLD = 1e-8
DEFAULT_T_SAMPLES = (-1.0, -0.5, 0.25, 0.5, 1.0)
NEAR_ZERO_T = 1e-4
SERIES_TERMS = 40

_EPS = np.finfo(float).eps


class QuadratureError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _panel(f, a: float, b: float, n: int) -> float:
    x, w = _legendre_rule(n)
    half = 0.5 * (b - a)
    return half * float(np.dot(w, f(half * x + 0.5 * (a + b))))


def adaptive_gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    rel_tol: float = 1e-12,
    n_nodes: int = 10,
    max_panels: int = 4096,
) -> tuple[float, float]:
    """Integrate ``f`` over ``[a, b]``; return ``(value, error_estimate)``.

    A panel is accepted when its n-point rule and the sum of the rules on its
    two halves agree to within the panel's share (by width) of the global
    tolerance; otherwise it is bisected.  ``f`` must accept numpy arrays.
    """
    width = b - a
    whole = _panel(f, a, b, n_nodes)
    scale = abs(whole)
    stack = [(a, b, whole)]
    total = 0.0
    err = 0.0
    accepted = 0
    while stack:
        lo, hi, coarse = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid, n_nodes)
        right = _panel(f, mid, hi, n_nodes)
        fine = left + right
        diff = abs(fine - coarse)
        share = (hi - lo) / width
        if diff <= rel_tol * max(scale, abs(fine)) * share or hi - lo < 1e-12 * width:
            total += fine
            err += diff
            accepted += 1
            continue
        if accepted + len(stack) + 2 > max_panels:
            raise QuadratureError(
                f"no convergence to rel_tol={rel_tol} within {max_panels} panels"
            )
        stack.append((mid, hi, right))
        stack.append((lo, mid, left))
    # summation roundoff floor
    err = max(err, float(4 * _EPS * accepted * abs(total)))
    return total, err


def euler_integral(
    p: int, t: float, rel_tol: float = 1e-12, with_error: bool = False
):
    """``(p+1) * int_0^1 (1-x)^p / (1 - (1-e^t) x) dx``.

    The denominator runs from 1 at ``x = 0`` to ``e^t > 0`` at ``x = 1`` and
    never vanishes for real ``t``.
    """
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if not 0 < rel_tol <= 1e-6:
        raise ValueError(f"rel_tol must lie in (0, 1e-6], got {rel_tol}")
    z = -math.expm1(t)

    def integrand(x):
        return (p + 1) * (1 - x) ** p / (1 - z * x)

    value, err = adaptive_gauss_legendre(integrand, 0.0, 1.0, rel_tol)
    return (value, err) if with_error else value


def egf_partial_sum(coeffs: Sequence[Fraction], t: float, n_terms: int) -> float:
    """``sum_{n < n_terms} coeffs[n] t^n / n!`` in double precision."""
    if n_terms > len(coeffs):
        raise ValueError(f"asked for {n_terms} terms, only {len(coeffs)} given")
    # t^n/n! built incrementally; coefficients converted to float only here
    total = 0.0
    term = 1.0
    for n in range(n_terms):
        if n:
            term *= t / n
        total += float(coeffs[n]) * term
    return total


def closed_form_eval(p: int, t: float) -> float:
    """Closed form of the generating function evaluated directly at ``t != 0``."""
    if t == 0:
        raise ValueError("closed form has a removable singularity at t=0")
    if abs(t) < NEAR_ZERO_T:
        warnings.warn(
            f"t={t} is near 0; the closed form loses precision to cancellation",
            RuntimeWarning,
            stacklevel=2,
        )
    d = math.expm1(t)
    hp = float(harmonic(p))
    value = (p + 1) * (t - hp) * math.exp(p * t) / d ** (p + 1)
    for k in range(1, p + 1):
        value += (p + 1) * math.comb(p, k) * float(harmonic(k)) / d ** (k + 1)
    return value


@dataclass(frozen=True)
class EvalReport:
    t: float
    p: int
    integral_value: float
    series_value: float
    closed_form_value: float | None
    abs_diff_integral_series: float
    abs_diff_integral_closed: float | None
    threshold: float = THRESHOLD

    @property
    def flagged(self) -> bool:
        diffs = [self.abs_diff_integral_series, self.abs_diff_integral_closed]
        return any(d is not None and not d < self.threshold for d in diffs)


def cross_validate(
    p_max: int,
    t_samples: Sequence[float] = DEFAULT_T_SAMPLES,
    rel_tol: float = 1e-12,
    threshold: float = THRESHOLD,
) -> list[EvalReport]:
    """One report per ``(p, t)``, p-major.  At ``t = 0`` the closed-form
    fields are ``None``."""
    reports = []
    if not t_samples:
        return reports
    for p in range(p_max + 1):
        coeffs = pbern_hypergeometric(SERIES_TERMS - 1, p)
        for t in t_samples:
            t = float(t)
            integral = euler_integral(p, t, rel_tol)
            series = egf_partial_sum(coeffs, t, SERIES_TERMS)
            closed = closed_form_eval(p, t) if t != 0 else None
            reports.append(
                EvalReport(
                    t=t,
                    p=p,
                    integral_value=integral,
                    series_value=series,
                    closed_form_value=closed,
                    abs_diff_integral_series=abs(integral - series),
                    abs_diff_integral_closed=(
                        None if closed is None else abs(integral - closed)
                    ),
                    threshold=threshold,
                )
            )
    return reports
