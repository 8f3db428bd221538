"""Boundary-slope bounds for Montesinos knots."""

import json as _json

from ._mslope import (
    analyze_json,
    continued_fraction,
    crossing_counts,
    enumerate_counts,
    gauss_code,
    knot_class,
    pd_code,
    random_expressions,
    render_svg,
    restricted_form,
    slope_interval,
    sweep_bounds,
    twists,
    verify_random,
)

__all__ = [
    "analyze",
    "analyze_json",
    "continued_fraction",
    "crossing_counts",
    "enumerate_counts",
    "gauss_code",
    "knot_class",
    "pd_code",
    "random_expressions",
    "render_svg",
    "restricted_form",
    "slope_interval",
    "sweep_bounds",
    "twists",
    "verify_random",
]


def analyze(expression):
    """Full analysis of one knot expression, as a dict."""
    return _json.loads(analyze_json(expression))
