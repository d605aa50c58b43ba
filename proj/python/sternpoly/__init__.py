"""Exact Type-1 Stern polynomials, the series H_k(z), their continued
fractions and the associated Mahler matrices."""

import json
from fractions import Fraction

from ._core import (
    SternError,
    agreement_degree,
    alpha,
    closed_form_2k,
    closed_form_2k_minus_1,
    g_product,
    h_series,
    set_term_cap,
    stern_poly,
    stern_value_at_one,
    term_cap,
)
from . import _core

__all__ = [
    "SternError",
    "agreement_degree",
    "alpha",
    "closed_form_2k",
    "closed_form_2k_minus_1",
    "eval_cf",
    "eval_series_certified",
    "g_product",
    "h_series",
    "regular_cf",
    "set_term_cap",
    "stern_poly",
    "stern_value_at_one",
    "term_cap",
    "verify",
]


def _split(x):
    x = Fraction(x)
    return x.numerator, x.denominator


def eval_series_certified(t, k, alpha, order):
    """Certified (lo, hi) enclosure of H_k(alpha) as Fractions."""
    lo, hi = _core.eval_series_certified(t, k, *_split(alpha), order)
    return Fraction(*lo), Fraction(*hi)


def eval_cf(t, k, alpha, depth):
    """Exact convergents 0..depth of the continued fraction at alpha."""
    return [Fraction(*v) for v in _core.eval_cf(t, k, *_split(alpha), depth)]


def regular_cf(t, k, depth):
    """(b0, [(numerator, denominator), ...]) of the regular form at z = 1/2."""
    b0, terms = _core.regular_cf(t, k, depth)
    return Fraction(*b0), terms


def verify(t=(2, 3), k=(1, 2, 3), depth=5, order=256, suite="all", precision=60):
    """Run the verification suites and return the report as a dict."""
    return json.loads(_core.verify_json(list(t), list(k), depth, order, suite, precision))
