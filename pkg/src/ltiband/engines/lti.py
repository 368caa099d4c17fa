"""
Band structures as the response of a linear translation-invariant system.

A cell is a spike train, the chain's impulse response is the nearest-neighbor
kernel [beta, alpha, beta], and the bands are read off the Fourier transform
of the kernel: alpha + 2 beta cos(a k) for the primitive cell, and M phase-shifted,
resampled copies of it for an M-site supercell.
"""

import logging
import math
import time
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidArgumentError
from ..lattice import (
    BandStructure,
    Engine,
    FloatArray,
    ImpulseResponse,
    KGrid,
    LatticeParams,
    SpikeTrain,
    branch_indices,
)
from .registry import register

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvolutionOutput:
    """Full (zero-padded) convolution of a spike train with a kernel."""

    offsets: tuple[int, ...]
    values: tuple[float, ...]
    source_spikes: SpikeTrain
    kernel: ImpulseResponse

    @property
    def taps(self) -> list[tuple[int, float]]:
        return list(zip(self.offsets, self.values, strict=True))

    def as_array(self) -> FloatArray:
        return np.asarray(self.values, dtype=np.float64)

    def dtft(self, k: float, a: float = 1.0) -> complex:
        """Direct-summation DTFT of the output taps."""
        offsets = np.asarray(self.offsets, dtype=np.float64)
        return complex(np.sum(self.as_array() * np.exp(-1j * k * offsets * a)))


@dataclass(frozen=True)
class BranchFormula:
    """One folded branch: alpha + 2 beta cos(i pi / M + a k / M)."""

    branch_index: int
    cell_size: int
    params: LatticeParams

    def __post_init__(self) -> None:
        if self.branch_index not in branch_indices(self.cell_size):
            raise InvalidArgumentError(
                f"branch {self.branch_index} is not one of {branch_indices(self.cell_size)} "
                f"for M={self.cell_size}"
            )

    @property
    def phase(self) -> float:
        return self.branch_index * math.pi / self.cell_size

    def __call__(self, k: float) -> float:
        p = self.params
        return p.alpha + 2.0 * p.beta * math.cos(self.phase + p.a * k / self.cell_size)


def _output(train: SpikeTrain, kernel: ImpulseResponse, values: FloatArray) -> ConvolutionOutput:
    _, origin = train.dense()
    first = origin - kernel.half_width
    return ConvolutionOutput(
        offsets=tuple(range(first, first + len(values))),
        values=tuple(float(v) for v in values),
        source_spikes=train,
        kernel=kernel,
    )


def convolve(train: SpikeTrain, kernel: ImpulseResponse) -> ConvolutionOutput:
    """Discrete linear convolution of the spike weights with the kernel taps."""
    if len(train) == 0:
        raise InvalidArgumentError("cannot convolve an empty spike train")
    dense, _ = train.dense()
    return _output(train, kernel, np.convolve(dense, kernel.as_array(), mode="full"))


def correlate(train: SpikeTrain, kernel: ImpulseResponse) -> ConvolutionOutput:
    """Discrete cross-correlation; equals convolve() for a symmetric kernel."""
    if len(train) == 0:
        raise InvalidArgumentError("cannot correlate an empty spike train")
    dense, _ = train.dense()
    return _output(train, kernel, np.correlate(dense, kernel.as_array(), mode="full"))


def dispersion_pc(params: LatticeParams, k: float) -> float:
    """Primitive-cell band alpha + 2 beta cos(a k)."""
    return params.alpha + 2.0 * params.beta * math.cos(params.a * k)


def folded_bands(params: LatticeParams, M: int, k: float) -> list[tuple[int, float]]:
    """(branch index, energy) for every branch of an M-site supercell at k."""
    return [(i, BranchFormula(i, M, params)(k)) for i in branch_indices(M)]


def fourier_of_output(output: ConvolutionOutput, k: float, a: float = 1.0) -> complex:
    """Fourier transform of the convolution output at k.

    By the convolution theorem this is H[k] times the spike-train transform;
    it is a diagnostic, not a band energy.
    """
    return output.dtft(k, a)


def fold_trace(params: LatticeParams, M: int, k: float, branch: int) -> float:
    """Primitive-cell momentum that branch `branch` of the M-cell samples at k.

    dispersion_pc(params, fold_trace(params, M, k, i)) equals the branch energy.
    """
    BranchFormula(branch, M, params)
    return k / M + branch * math.pi / (M * params.a)


@register("lti")
def lti_band_structure(params: LatticeParams, M: int, grid: KGrid) -> BandStructure:
    """Evaluate every folded branch on the grid; no diagonalization."""
    start = time.perf_counter()
    labels = branch_indices(M)
    phases = np.asarray(labels, dtype=np.float64) * math.pi / M
    k = grid.points
    energies = params.alpha + 2.0 * params.beta * np.cos(
        phases[np.newaxis, :] + params.a * k[:, np.newaxis] / M
    )
    elapsed = time.perf_counter() - start
    logger.debug("lti sweep M=%d N=%d took %.3es", M, grid.count, elapsed)
    return BandStructure(
        kgrid=grid,
        energies=energies,
        labels=labels,
        engine=Engine.LTI,
        params=params,
        cell_size=M,
        wall_time=elapsed,
    )


@dataclass(frozen=True)
class BranchCrossing:
    """Two branches meeting at (or between grid points around) k."""

    k: float
    branches: tuple[int, int]


def branch_crossings(
    params: LatticeParams, M: int, grid: KGrid, tol: float = 1e-12
) -> list[BranchCrossing]:
    """Locate degeneracies between pairs of branches on the grid.

    A crossing is a grid point where two branches agree within tol, or a sign
    change of their difference between neighboring points (linearly interpolated).
    """
    bands = lti_band_structure(params, M, grid)
    k = grid.points
    found: list[BranchCrossing] = []
    for a_idx in range(M):
        for b_idx in range(a_idx + 1, M):
            pair = (int(bands.labels[a_idx]), int(bands.labels[b_idx]))
            diff = bands.band(a_idx) - bands.band(b_idx)
            touching = np.abs(diff) <= tol
            for n in np.flatnonzero(touching):
                found.append(BranchCrossing(k=float(k[n]), branches=pair))
            for n in range(len(k) - 1):
                if touching[n] or touching[n + 1] or diff[n] * diff[n + 1] >= 0:
                    continue
                frac = diff[n] / (diff[n] - diff[n + 1])
                found.append(
                    BranchCrossing(k=float(k[n] + frac * (k[n + 1] - k[n])), branches=pair)
                )
    found.sort(key=lambda c: (c.k, c.branches))
    return found


# === Circulant view of the same kernel ===


def circulant_first_row(kernel: ImpulseResponse, N: int) -> FloatArray:
    """Kernel taps wrapped onto a ring of N sites."""
    if N < 1:
        raise InvalidArgumentError(f"ring size must be positive, got {N}")
    row = np.zeros(N, dtype=np.float64)
    for d, tap in zip(kernel.offsets, kernel.taps, strict=True):
        row[d % N] += tap
    return row


def circulant_matrix(kernel: ImpulseResponse, N: int) -> FloatArray:
    """Ring operator C[i, j] = row[(j - i) mod N]; C @ x is the periodic convolution."""
    row = circulant_first_row(kernel, N)
    index = (np.arange(N)[np.newaxis, :] - np.arange(N)[:, np.newaxis]) % N
    return row[index]


def circulant_spectrum_dft(kernel: ImpulseResponse, N: int) -> FloatArray:
    """Eigenvalues of the ring operator as the DFT of its first row, ascending."""
    spectrum = np.fft.fft(circulant_first_row(kernel, N))
    return np.sort(spectrum.real)


def eigen_relation_residual(kernel: ImpulseResponse, N: int, n: int) -> tuple[complex, float]:
    """(lambda, ||C e - lambda e||) for the sampled exponential e_x = exp(j 2 pi n x / N)."""
    C = circulant_matrix(kernel, N)
    x = np.arange(N)
    e = np.exp(2j * math.pi * n * x / N)
    lam = complex(np.fft.fft(circulant_first_row(kernel, N))[n % N])
    return lam, float(np.linalg.norm(C @ e - lam * e))


__all__ = [
    "BranchCrossing",
    "BranchFormula",
    "ConvolutionOutput",
    "branch_crossings",
    "circulant_first_row",
    "circulant_matrix",
    "circulant_spectrum_dft",
    "convolve",
    "correlate",
    "dispersion_pc",
    "eigen_relation_residual",
    "fold_trace",
    "folded_bands",
    "fourier_of_output",
    "lti_band_structure",
]
