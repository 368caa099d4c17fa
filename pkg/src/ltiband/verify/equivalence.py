"""
Equivalence checks between the analytic and the diagonalization routes.

Comparisons are between sorted energy multisets at each k; branch labels from
the analytic formula and eigenvalue order from the solver are never matched.
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..engines import (
    BranchFormula,
    HermitianMatrix,
    band_sweep,
    circulant_matrix,
    circulant_spectrum_dft,
    dispersion_pc,
    eigenvalues_hermitian,
    fd_dispersion,
    fd_params_from_lattice,
    fold_trace,
    lti_band_structure,
)
from ..exceptions import InvalidArgumentError
from ..lattice import (
    BandStructure,
    ImpulseResponse,
    KGrid,
    LatticeParams,
    branch_indices,
    canonical_positions,
)
from .reports import (
    BranchTrace,
    CirculantReport,
    EquivalenceReport,
    FoldTraceReport,
    GridSpec,
    VerificationSuite,
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
IDENTITY_TOLERANCE = 1e-12
CIRCULANT_TOLERANCE = 1e-10


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol!r}")


def compare_band_structures(
    lti: BandStructure, tb: BandStructure, tol: float = DEFAULT_TOLERANCE
) -> EquivalenceReport:
    """Max per-k deviation between two band structures on the same grid."""
    _check_tol(tol)
    if lti.kgrid != tb.kgrid or lti.cell_size != tb.cell_size:
        raise InvalidArgumentError("band structures must share grid and cell size")
    deviations = np.max(np.abs(lti.sorted_energies() - tb.sorted_energies()), axis=1)
    return EquivalenceReport.from_deviations(
        "lti-vs-tb", lti.cell_size, lti.kgrid, [float(d) for d in deviations], tol
    )


def compare_engines(
    params: LatticeParams, M: int, grid: KGrid, tol: float = DEFAULT_TOLERANCE
) -> EquivalenceReport:
    """Analytic folded branches against supercell diagonalization at every k.

    Raises:
        EngineError: tagged with the k-point where diagonalization failed.
    """
    _check_tol(tol)
    report = compare_band_structures(
        lti_band_structure(params, M, grid), band_sweep(params, M, grid), tol
    )
    logger.debug("M=%d lti vs tb: max deviation %.3e eV", M, report.max_abs_deviation)
    return report


def verify_fd_mapping(
    params: LatticeParams, grid: KGrid, tol: float = DEFAULT_TOLERANCE
) -> EquivalenceReport:
    """Finite-difference band with 2 t0 + U = alpha, -t0 = beta against alpha + 2 beta cos(ak)."""
    _check_tol(tol)
    fd = fd_params_from_lattice(params)
    deviations = [
        abs(fd_dispersion(fd, float(k), params.a) - dispersion_pc(params, float(k)))
        for k in grid.points
    ]
    return EquivalenceReport.from_deviations("fd-vs-lti", 1, grid, deviations, tol)


def trace_folding(
    params: LatticeParams, M: int, grid: KGrid, tol: float = IDENTITY_TOLERANCE
) -> FoldTraceReport:
    """Unfold every branch onto the primitive band and record the identity residual."""
    branches: list[BranchTrace] = []
    for i in branch_indices(M):
        formula = BranchFormula(i, M, params)
        k_pc: list[float] = []
        worst = 0.0
        for k in grid.points:
            unfolded = fold_trace(params, M, float(k), i)
            k_pc.append(unfolded)
            worst = max(worst, abs(formula(float(k)) - dispersion_pc(params, unfolded)))
        branches.append(BranchTrace(branch=i, k_pc=k_pc, max_residual=worst))
    worst_all = max(b.max_residual for b in branches)
    return FoldTraceReport(
        cell_size=M,
        grid=GridSpec.of(grid),
        tolerance=tol,
        branches=branches,
        passed=worst_all <= tol,
    )


def check_folding_completeness(
    params: LatticeParams, M: int, grid: KGrid, tol: float = IDENTITY_TOLERANCE
) -> EquivalenceReport:
    """Branch energies against the primitive band sampled at k/M + 2 pi m / (M a).

    A pass means folding neither loses nor duplicates states.
    """
    _check_tol(tol)
    bands = lti_band_structure(params, M, grid).sorted_energies()
    shifts = np.asarray(list(canonical_positions(M)), dtype=np.float64) * 2.0 * math.pi / (M * params.a)
    folded = np.sort(
        params.alpha
        + 2.0 * params.beta * np.cos(params.a * (grid.points[:, np.newaxis] / M + shifts)),
        axis=1,
    )
    deviations = np.max(np.abs(bands - folded), axis=1)
    return EquivalenceReport.from_deviations(
        "folding-completeness", M, grid, [float(d) for d in deviations], tol
    )


def check_circulant_identity(
    kernel: ImpulseResponse, N: int, tol: float = CIRCULANT_TOLERANCE
) -> CirculantReport:
    """Jacobi spectrum of the N-site ring operator against the DFT of its first row."""
    _check_tol(tol)
    if N < 1:
        raise InvalidArgumentError(f"ring size must be positive, got {N}")
    C = circulant_matrix(kernel, N)
    by_jacobi = np.asarray(eigenvalues_hermitian(HermitianMatrix(C.astype(np.complex128))))
    deviation = float(np.max(np.abs(by_jacobi - circulant_spectrum_dft(kernel, N))))
    return CirculantReport(
        ring_size=N,
        kernel=list(kernel.taps),
        tolerance=tol,
        max_abs_deviation=deviation,
        passed=deviation <= tol,
    )


def run_verification(
    params: LatticeParams,
    cell_sizes: Sequence[int],
    grid: KGrid,
    tol: float = DEFAULT_TOLERANCE,
) -> VerificationSuite:
    """Engine equivalence, folding completeness and fold traces per M, plus the FD mapping."""
    _check_tol(tol)
    suite = VerificationSuite(alpha=params.alpha, beta=params.beta, a=params.a)
    for M in cell_sizes:
        suite.equivalence.append(compare_engines(params, M, grid, tol))
        suite.completeness.append(check_folding_completeness(params, M, grid))
        suite.fold_traces.append(trace_folding(params, M, grid))
    suite.fd_mapping = verify_fd_mapping(params, grid, tol)
    return suite
