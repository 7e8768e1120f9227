"""k-sink location on dynamic path networks.

Vertices and edges are 0-based here, as in the C++ API; the JSON instance and
plan formats are 1-based.
"""

from ._core import (
    Engine,
    OneSink,
    PathNetwork,
    Point,
    Segment,
    SolvePlan,
    evacuation_time_ref,
    format_instance,
    format_plan,
    generate_instance,
    oracle_1sink,
    oracle_feasible,
    oracle_ksink_dp,
    parse_instance,
    solve_ksink,
    verify_plan,
)

__all__ = [
    "Engine",
    "OneSink",
    "PathNetwork",
    "Point",
    "Segment",
    "SolvePlan",
    "evacuation_time_ref",
    "format_instance",
    "format_plan",
    "generate_instance",
    "oracle_1sink",
    "oracle_feasible",
    "oracle_ksink_dp",
    "parse_instance",
    "solve_ksink",
    "verify_plan",
]
