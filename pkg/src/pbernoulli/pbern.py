"""p-Bernoulli numbers ``B_{n,p}`` and polynomials ``B_{n,p}(x)``.

Two exact routes to the same numbers:

* :func:`pbern_hypergeometric` expands ``2F1(1, 1; p+2; 1 - e^t)`` by
  composing the hypergeometric series with ``z = 1 - e^t``.
* :func:`pbern_closed_form` assembles the harmonic-number closed form of the
  generating function term by term as Laurent series and checks that all
  poles at ``t = 0`` cancel.

Both return ``[B_{0,p}, ..., B_{n_max,p}]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .series import (
    LaurentSeries,
    TruncatedSeries,
    compose_zero_const,
    exp_scalar_t,
    laurent_add,
    laurent_div_pole,
    to_power_series,
)

__all__ = [
    "HarmonicTable",
    "PBernoulliTable",
    "XPolynomial",
    "harmonic",
    "pochhammer",
    "hypergeometric_coeffs",
    "pbern_hypergeometric",
    "closed_form_laurent",
    "pbern_closed_form",
    "pbern_table",
    "pbern_polynomial",
]


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"harmonic number index must be >= 0, got {n}")
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


@dataclass(frozen=True)
class HarmonicTable:
    """``values[n] = H_n`` for ``n = 0..len(values)-1``."""

    values: tuple[Fraction, ...]

    @classmethod
    def build(cls, n_max: int) -> HarmonicTable:
        values = [Fraction(0)]
        for n in range(1, n_max + 1):
            values.append(values[-1] + Fraction(1, n))
        return cls(tuple(values))

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def pochhammer(a: int | Fraction, m: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+m-1)``; ``(a)_0 = 1``."""
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


def hypergeometric_coeffs(p: int, n_terms: int) -> list[Fraction]:
    """Coefficients of ``2F1(1, 1; p+2; z)`` in ``z``: ``(1)_m (1)_m / ((p+2)_m m!)``."""
    return [
        pochhammer(1, m) * pochhammer(1, m) / (pochhammer(p + 2, m) * factorial(m))
        for m in range(n_terms)
    ]


def _egf_to_numbers(series: TruncatedSeries, n_max: int) -> list[Fraction]:
    return [series[n] * factorial(n) for n in range(n_max + 1)]


def pbern_hypergeometric(n_max: int, p: int) -> list[Fraction]:
    _check_indices(n_max, p)
    z = 1 - exp_scalar_t(1, n_max)
    egf = compose_zero_const(hypergeometric_coeffs(p, n_max + 1), z)
    return _egf_to_numbers(egf, n_max)


def closed_form_laurent(n_max: int, p: int) -> LaurentSeries:
    """Sum of the singular summands of the closed form, before pole removal.

    Each numerator is carried to order ``n_max + p + 2`` so that after
    dividing by ``(e^t - 1)^{k+1}`` every summand is still known through
    ``t^{n_max}``.  The harmonic sum runs over ``k = 1..p``; its ``k = 0``
    term would carry ``H_0 = 0``.
    """
    _check_indices(n_max, p)
    order = n_max + p + 2
    h = HarmonicTable.build(p)

    t_minus_hp = TruncatedSeries.monomial(1, order) - h[p]
    leading = (t_minus_hp * exp_scalar_t(p, order)).scale(p + 1)
    total = laurent_div_pole(leading, p, out_order=n_max)

    for k in range(1, p + 1):
        num = TruncatedSeries.constant((p + 1) * comb(p, k) * h[k], order)
        total = laurent_add(total, laurent_div_pole(num, k, out_order=n_max))
    return total


def pbern_closed_form(n_max: int, p: int) -> list[Fraction]:
    """Raises :class:`~pbernoulli.series.PoleError` if the poles fail to cancel."""
    egf = to_power_series(closed_form_laurent(n_max, p))
    return _egf_to_numbers(egf, n_max)


@dataclass(frozen=True)
class PBernoulliTable:
    """Grid ``values[n][p] = B_{n,p}`` for ``0 <= n <= n_max, 0 <= p <= p_max``."""

    n_max: int
    p_max: int
    values: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        n, p = index
        return self.values[n][p]

    def column(self, p: int) -> list[Fraction]:
        return [row[p] for row in self.values]

    def cells(self) -> Iterator[tuple[int, int, Fraction]]:
        """Yield ``(n, p, B_{n,p})`` in n-major order."""
        for n, row in enumerate(self.values):
            for p, value in enumerate(row):
                yield n, p, value

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]]) -> PBernoulliTable:
        p_max = len(columns) - 1
        n_max = len(columns[0]) - 1
        rows = tuple(
            tuple(Fraction(columns[p][n]) for p in range(p_max + 1))
            for n in range(n_max + 1)
        )
        return cls(n_max, p_max, rows)


def pbern_table(n_max: int, p_max: int, check: bool = False) -> PBernoulliTable:
    """Fill the grid column by column from the hypergeometric route.

    With ``check=True`` each column is recomputed from the closed form and a
    ``ValueError`` is raised on the first disagreement.
    """
    _check_indices(n_max, p_max)
    columns = []
    for p in range(p_max + 1):
        col = pbern_hypergeometric(n_max, p)
        if check:
            other = pbern_closed_form(n_max, p)
            for n, (a, b) in enumerate(zip(col, other)):
                if a != b:
                    raise ValueError(
                        f"methods disagree at n={n}, p={p}: {a} != {b}"
                    )
        columns.append(col)
    return PBernoulliTable.from_columns(columns)


@dataclass(frozen=True)
class XPolynomial:
    """Polynomial in ``x`` with coefficients in ascending powers."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        # zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return ", ".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)


def pbern_polynomial(n_max: int, p: int) -> list[XPolynomial]:
    """``B_{n,p}(x) = sum_j C(n, j) B_{j,p} x^{n-j}`` for ``n = 0..n_max``."""
    numbers = pbern_hypergeometric(n_max, p)
    polys = []
    for n in range(n_max + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for j in range(n + 1):
            coeffs[n - j] = comb(n, j) * numbers[j]
        polys.append(XPolynomial(coeffs))
    return polys


def _check_indices(n_max: int, p: int) -> None:
    if n_max < 0 or p < 0:
        raise ValueError(f"indices must be nonnegative, got n_max={n_max}, p={p}")
