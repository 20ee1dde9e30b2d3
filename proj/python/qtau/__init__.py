"""Exact q-series engine: generalized tau tables, partition counts and
congruence checks, backed by the C++ core."""

import json as _json

from ._qtau import (
    binom_exact,
    binom_mod2,
    binom_shifted_mod_l,
    bounded_frequency_count,
    composition_weighted_sum,
    distinct_count,
    eta_coeffs,
    frequency_set_count,
    omega,
    omega_scaled,
    p_adic_valuation,
    partition_count,
    regular_count,
    registry,
    run_all_json,
    run_check_json,
    sigma,
    tau_table,
    triangular_coeff,
)

__all__ = [
    "binom_exact",
    "binom_mod2",
    "binom_shifted_mod_l",
    "bounded_frequency_count",
    "composition_weighted_sum",
    "distinct_count",
    "eta_coeffs",
    "frequency_set_count",
    "omega",
    "omega_scaled",
    "p_adic_valuation",
    "partition_count",
    "regular_count",
    "registry",
    "run_all",
    "run_check",
    "sigma",
    "tau_table",
    "triangular_coeff",
]


def run_check(check_id, limit):
    """Run one congruence check; returns the outcome as a dict."""
    return _json.loads(run_check_json(check_id, limit))


def run_all(profile="quick"):
    """Run the whole catalog; returns a list of outcome dicts."""
    return _json.loads(run_all_json(profile))
