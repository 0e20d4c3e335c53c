"""Exact multiplicity discriminants of univariate polynomials."""

from ._multdisc import (
    MultdiscError,
    classify,
    cli,
    comparison_table,
    dbar_mu,
    dmu,
    dmu_degree,
    dmu_symbolic,
    partitions,
    poly_from_roots,
    psd,
    run_suite,
    s_sequence,
    yhz_condition_symbolic,
    yhz_count,
    yhz_degree,
    yhz_degree_lower_bound,
)

__all__ = [
    "MultdiscError",
    "classify",
    "cli",
    "comparison_table",
    "dbar_mu",
    "dmu",
    "dmu_degree",
    "dmu_symbolic",
    "partitions",
    "poly_from_roots",
    "psd",
    "run_suite",
    "s_sequence",
    "yhz_condition_symbolic",
    "yhz_count",
    "yhz_degree",
    "yhz_degree_lower_bound",
]
