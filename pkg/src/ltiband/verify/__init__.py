"""Equivalence and traceability checks."""

from .equivalence import (
    DEFAULT_TOLERANCE,
    IDENTITY_TOLERANCE,
    check_circulant_identity,
    check_folding_completeness,
    compare_band_structures,
    compare_engines,
    run_verification,
    trace_folding,
    verify_fd_mapping,
)
from .reports import (
    BranchTrace,
    CirculantReport,
    EquivalenceReport,
    FoldTraceReport,
    GridSpec,
    VerificationSuite,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "IDENTITY_TOLERANCE",
    "BranchTrace",
    "CirculantReport",
    "EquivalenceReport",
    "FoldTraceReport",
    "GridSpec",
    "VerificationSuite",
    "check_circulant_identity",
    "check_folding_completeness",
    "compare_band_structures",
    "compare_engines",
    "run_verification",
    "trace_folding",
    "verify_fd_mapping",
]
