"""Negative beta shifts from Python."""

from fractions import Fraction
import json

from ._core import (
    GraphSlice,
    NegbetaError,
    ShiftSpec,
    classify,
    expand,
    glue,
    run_cli,
)
from ._core import mu_n as _mu_n
from ._core import verify_factor as _verify_factor

__all__ = [
    "GraphSlice",
    "NegbetaError",
    "ShiftSpec",
    "classify",
    "expand",
    "glue",
    "mu_n",
    "run_cli",
    "verify_factor",
]


def mu_n(spec, n, m):
    """Cylinder masses of the uniform measure on Per(n), as exact fractions."""
    return {w: Fraction(p) for w, p in _mu_n(spec, n, m).items()}


def verify_factor(spec, depth):
    """Factor verification report as a dict."""
    return json.loads(_verify_factor(spec, depth))
