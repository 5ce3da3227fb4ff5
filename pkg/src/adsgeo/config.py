"""Shared numerical tolerances.

Two regimes: residuals of closed-form algebraic identities (products of a
handful of doubles) sit far below ``ALGEBRAIC_TOL``; anything produced by
iteration, fitting or root finding is only trusted to ``DERIVED_TOL``.
Three-valued inside/boundary/outside verdicts use a band of half-width
``BOUNDARY_BAND`` around the exact boundary.
"""

import os

ALGEBRAIC_TOL = 1e-9
DERIVED_TOL = 1e-7
BOUNDARY_BAND = 1e-8
BISECTION_TOL = 1e-9


def default_tol():
    """Default tolerance; the ADSGEO_TOL environment variable overrides it."""
    raw = os.environ.get("ADSGEO_TOL", "")
    return float(raw) if raw else ALGEBRAIC_TOL
