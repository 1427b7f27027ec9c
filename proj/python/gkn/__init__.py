"""Build, verify and certify parity-hypergraph constructions."""

from ._core import (
    Coloring,
    ConfigError,
    DomainError,
    EdgeSet,
    Error,
    FormatError,
    InternalInconsistency,
    SweepReport,
    alpha,
    build_g,
    build_h,
    certify,
    edge_probability,
    full_sweep,
    greedy_steiner_packing,
    max_feasible_n,
    merge_reports,
    motzkin_count,
    motzkin_sweep,
    read_coloring,
    sample_coloring,
    sample_planted_coloring,
    search,
    union_bound,
    verify_certificate,
)

__all__ = [
    "Coloring",
    "ConfigError",
    "DomainError",
    "EdgeSet",
    "Error",
    "FormatError",
    "InternalInconsistency",
    "SweepReport",
    "alpha",
    "build_g",
    "build_h",
    "certify",
    "edge_probability",
    "full_sweep",
    "greedy_steiner_packing",
    "max_feasible_n",
    "merge_reports",
    "motzkin_count",
    "motzkin_sweep",
    "read_coloring",
    "sample_coloring",
    "sample_planted_coloring",
    "search",
    "union_bound",
    "verify_certificate",
]
