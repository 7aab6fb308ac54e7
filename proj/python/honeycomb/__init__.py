"""Honeycombs, Horn inequalities and Littlewood-Richardson coefficients.

Spectra are sequences of ints, Fractions or strings such as "3/2". Functions
named *_sum use the convention lam (+) mu ~ nu; the others take boundary
triples (lam, mu, nu) of a honeycomb, where nu is the negated sum spectrum.
Rationals come back as fractions.Fraction.
"""

import json

from . import _core
from ._core import (
    Honeycomb,
    HoneycombError,
    boundary_distance,
    count_integral_triple,
    decide_by_horn,
    decide_sum,
    decide_triple,
    eigenvalues,
    enumerate_integral,
    fiber_volume,
    largest_lift,
    lr_oracle,
    matrix_with_spectrum,
    one_honeycomb,
    render_svg,
    shrink,
    tensor_multiplicity,
    translated,
)

__all__ = [
    "Honeycomb",
    "HoneycombError",
    "analyze_overlay",
    "boundary_distance",
    "check_saturation",
    "count_integral_triple",
    "decide_by_horn",
    "decide_sum",
    "decide_triple",
    "eigenvalues",
    "enumerate_integral",
    "facet_inequality",
    "fiber_volume",
    "handle_api",
    "horn_inequalities",
    "largest_lift",
    "lr_oracle",
    "matrix_with_spectrum",
    "monte_carlo_check",
    "one_honeycomb",
    "render_svg",
    "shrink",
    "tensor_multiplicity",
    "translated",
]


def check_saturation(lam, mu, nu, seed=1):
    """{"feasible", "integral_witness": Honeycomb or None, "agrees"}."""
    report = json.loads(_core.check_saturation(lam, mu, nu, seed))
    witness = report["integral_witness"]
    if witness is not None:
        report["integral_witness"] = Honeycomb.from_json(json.dumps(witness))
    return report


def horn_inequalities(n):
    return json.loads(_core.horn_inequalities(n))


def analyze_overlay(a, b):
    return json.loads(_core.analyze_overlay(a, b))


def facet_inequality(a, b):
    return json.loads(_core.facet_inequality(a, b))


def monte_carlo_check(lam, mu, trials, seed=1, threads=1):
    return json.loads(_core.monte_carlo_check(lam, mu, trials, seed, threads))


def handle_api(method, path, query=None, body=""):
    """(status, content type, body) for one request to the HTTP API."""
    if not isinstance(body, str):
        body = json.dumps(body)
    return _core.handle_api(method, path, query or {}, body)
