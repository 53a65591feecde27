"""Tropical counts of rational nodal and one-cuspidal plane curves."""

import json
from fractions import Fraction

from ._core import (
    DegenerateParameters,
    Error,
    InternalError,
    InvalidProblem,
    IoError,
    NonGenericConfiguration,
    ResourceLimit,
    SchemaError,
    ViolatedStructure,
    _certificate,
    _count,
    _eta_xi,
    _run_acceptance,
    binomial_oracle,
    count_adjacent,
    count_opposite,
    kontsevich,
    lattice_points,
    marked_point_count,
    normalized_area,
    problem_parameters,
)


def _frac(text):
    return Fraction(text)


def count(vertices, mode="nodal", points=None, seed=1, svg=False, max_cells=64):
    """Count curves through marked points (random generic ones from `seed` when omitted).

    Points are pairs of rationals (Fraction, int or "p/q" strings). Returns the
    count result as a dict with an integer "total"; with svg=True the dict also
    carries an "svg" list, one drawing per curve.
    """
    pts = None
    if points is not None:
        pts = [(str(Fraction(x)), str(Fraction(y))) for x, y in points]
    text, svgs = _count([tuple(v) for v in vertices], mode, pts, seed, svg, max_cells)
    result = json.loads(text)
    result["total"] = int(result["total"])
    if svg:
        result["svg"] = svgs
    return result


def eta_xi(m, p, q, r, s):
    eta, xi = _eta_xi(m, p, q, r, s)
    return _frac(eta), _frac(xi)


def nonexistence_certificate(shape, p, q, r=None, k=1):
    """shape is "trapezoid" (r defaults to 0, k to 1) or "triangle" (r defaults to 1)."""
    if r is None:
        r = 0 if shape == "trapezoid" else 1
    return json.loads(_certificate(shape, p, q, r, k))


def run_acceptance(suite):
    return json.loads(_run_acceptance(suite))


__all__ = [
    "DegenerateParameters",
    "Error",
    "InternalError",
    "InvalidProblem",
    "IoError",
    "NonGenericConfiguration",
    "ResourceLimit",
    "SchemaError",
    "ViolatedStructure",
    "binomial_oracle",
    "count",
    "count_adjacent",
    "count_opposite",
    "eta_xi",
    "kontsevich",
    "lattice_points",
    "marked_point_count",
    "nonexistence_certificate",
    "normalized_area",
    "problem_parameters",
    "run_acceptance",
]
