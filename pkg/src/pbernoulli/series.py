"""Exact truncated power series and Laurent series in one variable ``t``.

Coefficients are :class:`fractions.Fraction` throughout.  A
:class:`TruncatedSeries` of order ``N`` knows ``c_0..c_N`` and nothing
beyond; every binary operation truncates to the smaller order of its
operands, so no coefficient is ever reported that the inputs do not
determine.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "TruncatedSeries",
    "LaurentSeries",
    "PoleError",
    "add",
    "mul",
    "exp_scalar_t",
    "compose_zero_const",
    "invert",
    "laurent_div_pole",
    "laurent_add",
    "to_power_series",
]


class PoleError(ValueError):
    """A Laurent series still carries a nonzero negative-exponent term."""

    def __init__(self, exponent: int, coefficient: Fraction):
        self.exponent = exponent
        self.coefficient = coefficient
        super().__init__(
            f"nonzero coefficient {coefficient} at exponent {exponent}"
        )


def _frac_tuple(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = _frac_tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncatedSeries:
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, power: int, order: int, c: Scalar = 1) -> TruncatedSeries:
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(c)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1])

    def scale(self, c: Scalar) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(c * a for a in self.coeffs)

    def valuation(self) -> int | None:
        for j, a in enumerate(self.coeffs):
            if a:
                return j
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return invert(self) ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}])"


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[j] + b.coeffs[j] for j in range(n + 1))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip leading zeros of either factor; common for powers of (e^t - 1)
    va = a.valuation()
    vb = b.valuation()
    out = [Fraction(0)] * (n + 1)
    if va is None or vb is None:
        return TruncatedSeries(out)
    for i in range(va, n + 1 - vb):
        ai = ac[i]
        if not ai:
            continue
        for j in range(vb, n + 1 - i):
            out[i + j] += ai * bc[j]
    return TruncatedSeries(out)


def exp_scalar_t(c: Scalar, order: int) -> TruncatedSeries:
    """Expansion of ``exp(c t)`` through ``t^order``."""
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / j)
    return TruncatedSeries(coeffs)


def compose_zero_const(
    f_coeffs: Sequence[Scalar], g: TruncatedSeries
) -> TruncatedSeries:
    """Return ``sum_m f_coeffs[m] * g**m`` to the order of ``g``.

    ``g`` must have zero constant term, so ``g**m`` is ``O(t^m)`` and only
    ``m <= g.order`` contributes.
    """
    if g.coeffs[0]:
        raise ValueError(
            f"inner series must vanish at t=0, got constant term {g.coeffs[0]}"
        )
    n = g.order
    if len(f_coeffs) < n + 1:
        raise ValueError(
            f"need {n + 1} outer coefficients for order {n}, got {len(f_coeffs)}"
        )
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(f_coeffs[0])
    power = TruncatedSeries.constant(1, n)
    for m in range(1, n + 1):
        power = mul(power, g)
        fm = Fraction(f_coeffs[m])
        if not fm:
            continue
        # g**m starts at t^m
        for j in range(m, n + 1):
            out[j] += fm * power.coeffs[j]
    return TruncatedSeries(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    a0 = a.coeffs[0]
    if not a0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = 1 / a0
    for j in range(1, n + 1):
        s = sum((a.coeffs[i] * b[j - i] for i in range(1, j + 1)), Fraction(0))
        b[j] = -s / a0
    return TruncatedSeries(b)


@dataclass(frozen=True)
class LaurentSeries:
    """``sum_{e=v}^{N} c_e t^e + O(t^{N+1})`` with ``v`` possibly negative.

    ``valuation`` is ``None`` for the zero series (conceptually ``+inf``);
    ``order`` is the highest exponent the series is known to, and is kept
    even when the series is zero.
    """

    valuation: int | None
    coeffs: tuple[Fraction, ...]
    order: int

    @classmethod
    def from_coeffs(
        cls, start: int, coeffs: Iterable[Scalar]
    ) -> LaurentSeries:
        """Normalize a dense block of coefficients for exponents ``start..``."""
        coeffs = _frac_tuple(coeffs)
        order = start + len(coeffs) - 1
        for lead, c in enumerate(coeffs):
            if c:
                return cls(start + lead, coeffs[lead:], order)
        return cls(None, (), order)

    @classmethod
    def from_power_series(cls, a: TruncatedSeries) -> LaurentSeries:
        return cls.from_coeffs(0, a.coeffs)

    def is_zero(self) -> bool:
        return self.valuation is None

    def coefficient(self, exponent: int) -> Fraction:
        if exponent > self.order:
            raise IndexError(f"exponent {exponent} beyond known order {self.order}")
        if self.valuation is None or exponent < self.valuation:
            return Fraction(0)
        return self.coeffs[exponent - self.valuation]

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return laurent_add(self, other)

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order)


def laurent_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.order, b.order)
    if a.is_zero() and b.is_zero():
        return LaurentSeries(None, (), order)
    lo = min(v for v in (a.valuation, b.valuation) if v is not None)
    if lo > order:
        return LaurentSeries(None, (), order)
    return LaurentSeries.from_coeffs(
        lo, [a.coefficient(e) + b.coefficient(e) for e in range(lo, order + 1)]
    )


def _unit_part_of_expm1(order: int) -> TruncatedSeries:
    """``(e^t - 1)/t = sum_j t^j/(j+1)!`` through ``t^order``."""
    return TruncatedSeries(Fraction(1, factorial(j + 1)) for j in range(order + 1))


def laurent_div_pole(
    num: TruncatedSeries, k: int, out_order: int | None = None
) -> LaurentSeries:
    """Return ``num / (e^t - 1)**(k+1)`` as a Laurent series.

    ``(e^t - 1)**(k+1) = t**(k+1) * u**(k+1)`` with ``u(0) = 1``, so the
    quotient is ``num * u**-(k+1)`` shifted down by ``k+1``.  The result is
    known through exponent ``num.order - (k+1)``; pass ``out_order`` to
    demand at least that much.
    """
    if k < 0:
        raise ValueError(f"pole index must be nonnegative, got {k}")
    if out_order is not None and num.order < out_order + k + 1:
        raise ValueError(
            f"numerator of order {num.order} is too short: dividing by "
            f"(e^t-1)^{k + 1} through t^{out_order} needs order {out_order + k + 1}"
        )
    unit = _unit_part_of_expm1(num.order) ** (k + 1)
    quotient = mul(num, invert(unit))
    return LaurentSeries.from_coeffs(-(k + 1), quotient.coeffs)


def to_power_series(a: LaurentSeries) -> TruncatedSeries:
    """Drop the (required to be zero) principal part of ``a``."""
    if a.order < 0:
        raise ValueError(f"series known only through t^{a.order}")
    if a.valuation is not None and a.valuation < 0:
        raise PoleError(a.valuation, a.coeffs[0])
    return TruncatedSeries(a.coefficient(e) for e in range(a.order + 1))
