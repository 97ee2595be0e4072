"""Tight fusion frames from signed-permutation orbits, spherical design
lifts, and exact verification.

Thin wrapper over the _spherelift extension: exact rationals arrive as
canonical "p/q" strings and are converted to fractions.Fraction; JSON-string
certificates and reports are parsed into dictionaries.
"""

import json
from fractions import Fraction

from ._spherelift import (  # noqa: F401
    __version__,
    check_moments,
    check_pairwise,
    check_tff_union,
    ectff2_report,
    fourth_moment,
    gegenbauer,
    gegenbauer_exact,
    lift_orbit,
    orbit_defect,
    orbit_size,
    scale_solution,
    sic_planes,
    simplex_bound,
    single_orbit_solutions,
    two_orbit_solutions,
    two_point_test,
    union_defect_sum,
)
from . import _spherelift as _core


def frac(s):
    """Parse a canonical 'p/q' rational string."""
    return Fraction(s)


def defect(d, a, b):
    return frac(_core.orbit_defect(d, a, b))


def moment(d, a, b, probe="e1"):
    return frac(_core.fourth_moment(d, a, b, probe))


def union_defect(d, parts):
    value, tight = _core.union_defect_sum(d, parts)
    return frac(value), tight


def certificate(json_str):
    """Parse a certificate JSON string into a dict with a bool 'pass'."""
    cert = json.loads(json_str)
    cert["pass"] = cert["verdict"] == "pass"
    return cert


def tff2_certificate(d, parts):
    return certificate(_core.check_tff_union(d, parts, 2))


def report(json_str):
    return json.loads(json_str)
