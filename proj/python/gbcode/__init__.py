"""Minimum distance, weight and distance distributions of systematic codes
via Gröbner bases, with a brute-force reference."""

import json

from ._gbcode import (
    GbcodeError,
    SystematicCode,
    aspect_ratio_pair_calls,
    distance_distribution_gb,
    min_distance_gb,
    parse_code,
    random_code,
    read_code_file,
    sphere_decode_calls,
    verify_binomial_bound,
    weight_distribution_gb,
)
from . import _gbcode


def gb_report(code, jobs=1):
    """Report dict with keys distance, A, B, closest_pairs, method."""
    return json.loads(_gbcode.gb_report_json(code, jobs))


def brute_report(code):
    return json.loads(_gbcode.brute_report_json(code))


__all__ = [
    "GbcodeError",
    "SystematicCode",
    "aspect_ratio_pair_calls",
    "brute_report",
    "distance_distribution_gb",
    "gb_report",
    "min_distance_gb",
    "parse_code",
    "random_code",
    "read_code_file",
    "sphere_decode_calls",
    "verify_binomial_bound",
    "weight_distribution_gb",
]
