"""Band-structure engines: LTI (analytic), TB (diagonalization), FD (finite difference)."""

# Import engines to register them (side effect: registers engines)
from . import fd, lti, tb  # noqa: F401
from .eigen import (
    HermitianMatrix,
    eigenvalues_hermitian,
    eigh_hermitian,
    jacobi_symmetric,
    real_embedding,
)
from .fd import (
    FDParams,
    fd_band_structure,
    fd_circulant_eigs,
    fd_dispersion,
    fd_params_from_lattice,
    fd_sweep,
)
from .lti import (
    BranchCrossing,
    BranchFormula,
    ConvolutionOutput,
    branch_crossings,
    circulant_matrix,
    circulant_spectrum_dft,
    convolve,
    correlate,
    dispersion_pc,
    eigen_relation_residual,
    fold_trace,
    folded_bands,
    fourier_of_output,
    lti_band_structure,
)
from .registry import get_engine, list_engines, register
from .tb import band_sweep, band_sweep_concurrent, build_hamiltonian, interaction_blocks

__all__ = [
    "BranchCrossing",
    "BranchFormula",
    "ConvolutionOutput",
    "FDParams",
    "HermitianMatrix",
    "band_sweep",
    "band_sweep_concurrent",
    "branch_crossings",
    "build_hamiltonian",
    "circulant_matrix",
    "circulant_spectrum_dft",
    "convolve",
    "correlate",
    "dispersion_pc",
    "eigen_relation_residual",
    "eigenvalues_hermitian",
    "eigh_hermitian",
    "fd_band_structure",
    "fd_circulant_eigs",
    "fd_dispersion",
    "fd_params_from_lattice",
    "fd_sweep",
    "fold_trace",
    "folded_bands",
    "fourier_of_output",
    "get_engine",
    "interaction_blocks",
    "jacobi_symmetric",
    "list_engines",
    "lti_band_structure",
    "real_embedding",
    "register",
]
