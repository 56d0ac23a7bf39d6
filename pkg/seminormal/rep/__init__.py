"""Seminormal representations and the interpolating matrix."""

from seminormal.rep.hecke import (
    MatrixAction,
    SeminormalRep,
    SignConvention,
    build_sigma,
    build_sigma_inverse,
    build_t_q,
    build_u,
    long_cycle_matrix,
    relation_suite,
    resolve_convention,
)
from seminormal.rep.interp import (
    EXAMPLE_SHAPE,
    ExampleMatch,
    InterpolationCertificate,
    Normalization,
    balanced_matrix,
    d_matrix,
    fixture_consistency,
    hat_generators,
    hatted_generators,
    interpolating_matrix,
    interpolation_suite,
    load_fixtures,
    match_paper_example,
    normalization_matrix,
    rotation_findings,
    verify_intertwiner,
)

__all__ = [
    "MatrixAction",
    "SeminormalRep",
    "SignConvention",
    "build_sigma",
    "build_sigma_inverse",
    "build_t_q",
    "build_u",
    "long_cycle_matrix",
    "relation_suite",
    "resolve_convention",
    "EXAMPLE_SHAPE",
    "ExampleMatch",
    "InterpolationCertificate",
    "Normalization",
    "balanced_matrix",
    "d_matrix",
    "fixture_consistency",
    "hat_generators",
    "hatted_generators",
    "interpolating_matrix",
    "interpolation_suite",
    "load_fixtures",
    "match_paper_example",
    "normalization_matrix",
    "rotation_findings",
    "verify_intertwiner",
]
