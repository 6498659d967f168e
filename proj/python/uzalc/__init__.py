"""Certified coefficient-functional toolkit for a class of univalent functions.

Thin re-export of the compiled core: series-backed reconstructions from
Schur-parameterized Schwarz functions, coefficient functionals with their
sharp constants, interval branch-and-bound certificates, and the randomized
extremal search.
"""

from ._uzalc import (
    AuxKind,
    BestRecord,
    CertStatus,
    Certificate,
    ClassUFunction,
    EdgeReport,
    FunctionalSpec,
    GridResult,
    Lemma1Report,
    PositivityCertificate,
    Sample,
    SchurParams,
    SchwarzFunction,
    SearchConfig,
    TruncatedSeries,
    aux_dy_eval,
    aux_eval,
    aux_sharp_bound,
    bound,
    certify_dy_positive,
    certify_max,
    edge_profiles,
    evaluate,
    excess,
    grid_oracle,
    is_proven_case,
    maximize,
    proven_specs,
    rebuild,
    run_and_persist,
    run_restarts,
    sample,
    samples,
)

__all__ = [
    "AuxKind",
    "BestRecord",
    "CertStatus",
    "Certificate",
    "ClassUFunction",
    "EdgeReport",
    "FunctionalSpec",
    "GridResult",
    "Lemma1Report",
    "PositivityCertificate",
    "Sample",
    "SchurParams",
    "SchwarzFunction",
    "SearchConfig",
    "TruncatedSeries",
    "aux_dy_eval",
    "aux_eval",
    "aux_sharp_bound",
    "bound",
    "certify_dy_positive",
    "certify_max",
    "edge_profiles",
    "evaluate",
    "excess",
    "grid_oracle",
    "is_proven_case",
    "maximize",
    "proven_specs",
    "rebuild",
    "run_and_persist",
    "run_restarts",
    "sample",
    "samples",
]
