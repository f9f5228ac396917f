"""Exact p-Bernoulli numbers and polynomials with cross-checked derivations."""
from .pbern import (
    HarmonicTable,
    PBernoulliTable,
    XPolynomial,
    closed_form_laurent,
    harmonic,
    pbern_closed_form,
    pbern_hypergeometric,
    pbern_polynomial,
    pbern_table,
)
from .series import LaurentSeries, PoleError, Rational, TruncatedSeries

__version__ = "0.1.0"
