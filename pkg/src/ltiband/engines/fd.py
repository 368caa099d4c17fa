"""
Finite-difference Schrödinger Hamiltonian.

The central-difference discretization on a uniform grid has the kernel
[-t0, 2 t0 + U, -t0] with t0 = hbar^2 / (2 m* a^2). With 2 t0 + U = alpha and
-t0 = beta it is the tight-binding kernel, so both routes give one band.
"""

import logging
import math
import time
from dataclasses import dataclass, replace

import numpy as np

from ..exceptions import ConsistencyError, InvalidArgumentError
from ..lattice import (
    BandStructure,
    Engine,
    ImpulseResponse,
    KGrid,
    LatticeParams,
    branch_indices,
)
from .eigen import HermitianMatrix, eigenvalues_hermitian
from .lti import circulant_matrix, circulant_spectrum_dft
from .registry import register

logger = logging.getLogger(__name__)

CIRCULANT_TOL = 1e-10


@dataclass(frozen=True)
class FDParams:
    """Kinetic scale t0 and uniform on-site potential U, both in eV."""

    t0: float
    U: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t0) and math.isfinite(self.U)):
            raise InvalidArgumentError(f"t0 and U must be finite, got t0={self.t0!r}, U={self.U!r}")

    def kernel(self) -> ImpulseResponse:
        return ImpulseResponse((-self.t0, 2.0 * self.t0 + self.U, -self.t0))

    def as_lattice(self, a: float = 1.0) -> LatticeParams:
        return LatticeParams(alpha=2.0 * self.t0 + self.U, beta=-self.t0, a=a)


def fd_params_from_lattice(params: LatticeParams) -> FDParams:
    """Invert 2 t0 + U = alpha, -t0 = beta."""
    t0 = -params.beta
    return FDParams(t0=t0, U=params.alpha - 2.0 * t0)


def fd_dispersion(fd: FDParams, k: float, a: float = 1.0) -> float:
    """(2 t0 + U) - 2 t0 cos(a k), the DTFT of the finite-difference kernel."""
    return (2.0 * fd.t0 + fd.U) - 2.0 * fd.t0 * math.cos(a * k)


def fd_circulant_eigs(fd: FDParams, N: int) -> list[float]:
    """Spectrum of the periodic N-site finite-difference Hamiltonian.

    Computed twice, by Jacobi diagonalization of the circulant and as the DFT
    of its first row; the DFT values are returned once both agree.

    Raises:
        InvalidArgumentError: if N < 3.
        ConsistencyError: if the two routes disagree beyond 1e-10.
    """
    if N < 3:
        raise InvalidArgumentError(f"ring size must be at least 3, got {N}")
    kernel = fd.kernel()
    by_jacobi = np.asarray(
        eigenvalues_hermitian(HermitianMatrix(circulant_matrix(kernel, N).astype(np.complex128)))
    )
    by_dft = circulant_spectrum_dft(kernel, N)
    deviation = float(np.max(np.abs(by_jacobi - by_dft)))
    if deviation > CIRCULANT_TOL:
        raise ConsistencyError(
            f"circulant spectrum routes disagree by {deviation:.3e} (N={N}, t0={fd.t0}, U={fd.U})"
        )
    return [float(v) for v in by_dft]


def fd_band_structure(fd: FDParams, M: int, grid: KGrid, a: float = 1.0) -> BandStructure:
    """Finite-difference band folded into an M-site cell.

    Branch i samples fd_dispersion at the unfolded momentum k / M + i pi / (M a).
    """
    start = time.perf_counter()
    labels = branch_indices(M)
    energies = np.array(
        [
            [fd_dispersion(fd, float(k) / M + i * math.pi / (M * a), a) for i in labels]
            for k in grid.points
        ]
    )
    elapsed = time.perf_counter() - start
    logger.debug("fd sweep M=%d N=%d took %.3es", M, grid.count, elapsed)
    return BandStructure(
        kgrid=grid,
        energies=energies,
        labels=labels,
        engine=Engine.FD,
        params=fd.as_lattice(a),
        cell_size=M,
        wall_time=elapsed,
    )


@register("fd")
def fd_sweep(params: LatticeParams, M: int, grid: KGrid) -> BandStructure:
    """Finite-difference engine driven by tight-binding parameters.

    The result reports the caller's params, not the ones rebuilt from t0 and U.
    """
    bands = fd_band_structure(fd_params_from_lattice(params), M, grid, a=params.a)
    return replace(bands, params=params)
