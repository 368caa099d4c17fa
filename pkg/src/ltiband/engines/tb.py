"""
Conventional tight-binding route: build the supercell Bloch Hamiltonian and
diagonalize it at every k-point.
"""

import asyncio
import logging
import time

import numpy as np

from ..exceptions import EngineError, InvalidArgumentError, LtibandError
from ..lattice import BandStructure, ComplexArray, Engine, KGrid, LatticeParams
from .eigen import HermitianMatrix, eigenvalues_hermitian
from .registry import register

logger = logging.getLogger(__name__)


def _check_cell_size(M: int) -> None:
    if isinstance(M, bool) or not isinstance(M, int) or M < 1:
        raise InvalidArgumentError(f"cell size must be a positive integer, got {M!r}")


def interaction_blocks(
    params: LatticeParams, M: int
) -> tuple[ComplexArray, ComplexArray, ComplexArray]:
    """Interaction matrices (H_{-1,0}, H_{0,0}, H_{1,0}) of an M-site supercell.

    H_{0,0} couples sites inside the cell; H_{-1,0} and H_{1,0} carry the single
    bond that crosses into the left and right neighbor cells.
    """
    _check_cell_size(M)
    h_zero = np.zeros((M, M), dtype=np.complex128)
    np.fill_diagonal(h_zero, params.alpha)
    for n in range(M - 1):
        h_zero[n, n + 1] = params.beta
        h_zero[n + 1, n] = params.beta

    h_left = np.zeros((M, M), dtype=np.complex128)
    h_left[0, M - 1] = params.beta
    h_right = np.zeros((M, M), dtype=np.complex128)
    h_right[M - 1, 0] = params.beta
    return h_left, h_zero, h_right


def build_hamiltonian(params: LatticeParams, M: int, k: float) -> HermitianMatrix:
    """Bloch sum H_{0,0} + H_{-1,0} e^{jak} + H_{1,0} e^{-jak}.

    For M=1 both bonds land on the diagonal (alpha + 2 beta cos(ak)); for M=2 the
    internal and wrapped bonds share the off-diagonal entry.
    """
    h_left, h_zero, h_right = interaction_blocks(params, M)
    phase = complex(np.exp(1j * params.a * k))
    # conj() keeps the two phases exact mirrors of each other
    return HermitianMatrix(h_zero + h_left * phase + h_right * phase.conjugate())


def _eigenvalues_at(params: LatticeParams, M: int, k: float) -> list[float]:
    try:
        return eigenvalues_hermitian(build_hamiltonian(params, M, k))
    except LtibandError as e:
        raise EngineError(f"diagonalization failed: {e}", k=k, cell_size=M) from e


def _labels(M: int) -> tuple[str, ...]:
    return tuple(f"diag#{n}" for n in range(M))


@register("tb")
def band_sweep(params: LatticeParams, M: int, grid: KGrid) -> BandStructure:
    """Diagonalize the supercell Hamiltonian at every grid point, in order."""
    _check_cell_size(M)
    start = time.perf_counter()
    energies = np.array([_eigenvalues_at(params, M, float(k)) for k in grid.points])
    elapsed = time.perf_counter() - start
    logger.debug("tb sweep M=%d N=%d took %.3es", M, grid.count, elapsed)
    return BandStructure(
        kgrid=grid,
        energies=energies,
        labels=_labels(M),
        engine=Engine.TB,
        params=params,
        cell_size=M,
        wall_time=elapsed,
    )


async def band_sweep_concurrent(
    params: LatticeParams, M: int, grid: KGrid, workers: int = 4
) -> BandStructure:
    """Same as band_sweep, with k-points diagonalized on worker threads.

    Rows are assembled in grid order regardless of completion order.
    """
    _check_cell_size(M)
    if workers < 1:
        raise InvalidArgumentError(f"workers must be positive, got {workers}")
    semaphore = asyncio.Semaphore(workers)

    async def one(k: float) -> list[float]:
        async with semaphore:
            return await asyncio.to_thread(_eigenvalues_at, params, M, k)

    start = time.perf_counter()
    rows = await asyncio.gather(*(one(float(k)) for k in grid.points))
    elapsed = time.perf_counter() - start
    logger.debug("concurrent tb sweep M=%d N=%d workers=%d took %.3es", M, grid.count, workers, elapsed)
    return BandStructure(
        kgrid=grid,
        energies=np.array(rows),
        labels=_labels(M),
        engine=Engine.TB,
        params=params,
        cell_size=M,
        wall_time=elapsed,
    )
