"""Four-qubit hypergraph states: construction, orbits and entanglement measures."""

from hg4._core import (
    OrbitTable,
    apply_x,
    apply_z,
    classify,
    entropy_profile,
    enumerate_orbits,
    format_edges,
    geometric_entanglement,
    parse_edges,
    rank,
    run_suite,
    signs,
    standardize,
    state,
    suite_names,
    verify_stabilizers,
)

__all__ = [
    "OrbitTable",
    "apply_x",
    "apply_z",
    "classify",
    "entropy_profile",
    "enumerate_orbits",
    "format_edges",
    "geometric_entanglement",
    "parse_edges",
    "rank",
    "run_suite",
    "signs",
    "standardize",
    "state",
    "suite_names",
    "verify_stabilizers",
]
