"""Rank-2 sublattices of Z^N, secondary fans, dimer models and Kasteleyn
determinants, with exact integer arithmetic throughout."""

import json as _json

from dimerkit._core import (  # noqa: F401
    analyze_json,
    factor_antisymmetric,
    gkz_json,
    kasteleyn_det,
    lattice_from_polygon,
    plucker_form,
    secondary_fan_json,
    superpotential,
    unimodular_exists,
    vol_A,
)


def analyze(**kwargs):
    """Run the full pipeline; returns the report as a dict."""
    return _json.loads(analyze_json(**kwargs))


def secondary_fan(B):
    return _json.loads(secondary_fan_json(B))


def gkz_info(B):
    return _json.loads(gkz_json(B))
