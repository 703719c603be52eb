"""Python access to the polyexp C++ core.

Polynomials are strings such as ``"u^2 + u*v + v^2"``; set elements may be
ints, strings ``"p/q"`` or ``fractions.Fraction``. Reports come back as dicts
with the same layout as the CLI JSON.
"""

import json

from . import _polyexp
from ._polyexp import InputError, InternalError, suite_count

__all__ = [
    "InputError",
    "InternalError",
    "associated_h",
    "bi_decompose",
    "canonical",
    "detect_skew_form",
    "detect_special",
    "dist_poly",
    "distinct_distances_count",
    "factor",
    "grid_report",
    "growth_fit",
    "image",
    "is_line_param",
    "run_suite",
    "separated_ratio",
    "shared_components",
    "slope_poly",
    "stein_count",
    "suite_count",
    "sum_product",
    "trim_degenerate",
]


def _strs(values):
    return [str(v) for v in values]


canonical = _polyexp.canonical
slope_poly = _polyexp.slope_poly
factor = _polyexp.factor


def detect_special(f):
    return json.loads(_polyexp.detect_special(f))


def detect_skew_form(f):
    return json.loads(_polyexp.detect_skew_form(f))


def associated_h(f):
    return json.loads(_polyexp.associated_h(f))


def bi_decompose(f, seed=1):
    return json.loads(_polyexp.bi_decompose(f, seed))


def stein_count(f):
    return json.loads(_polyexp.stein_count(f))


def separated_ratio(f):
    return json.loads(_polyexp.separated_ratio(f))


def grid_report(f, a, b, c):
    return json.loads(_polyexp.grid_report(f, _strs(a), _strs(b), _strs(c)))


def image(f, a, b):
    return _polyexp.image(f, _strs(a), _strs(b))


def trim_degenerate(f, a, c):
    return json.loads(_polyexp.trim_degenerate(f, _strs(a), _strs(c)))


def growth_fit(f, family, schedule=(8, 16, 32, 64)):
    """family is a set-spec dict, e.g. {"kind": "arithmetic", "start": "0", "step": "1", "n": 0}."""
    return json.loads(_polyexp.growth_fit(f, json.dumps(family), list(schedule)))


def shared_components(f, kind, first, second):
    return json.loads(_polyexp.shared_components(f, kind, _strs(first), _strs(second)))


def dist_poly(coords):
    return _polyexp.dist_poly(list(coords))


def is_line_param(coords):
    return _polyexp.is_line_param(list(coords))


def distinct_distances_count(coords, params):
    return _polyexp.distinct_distances_count(list(coords), _strs(params))


def sum_product(a):
    return json.loads(_polyexp.sum_product(_strs(a)))


def run_suite(suite_id, seed=1):
    """(passed, line) for acceptance suite 1..suite_count."""
    return _polyexp.run_suite(suite_id, seed)
