"""
Hermitian eigensolver.

Cyclic Jacobi rotations on a real symmetric matrix. A complex Hermitian H is
handled through its real embedding [[Re H, -Im H], [Im H, Re H]], whose spectrum
is the spectrum of H with every eigenvalue doubled; the pairs are collapsed
after sorting. Real input skips the embedding.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..exceptions import ConsistencyError, ConvergenceError, InvalidArgumentError
from ..lattice import ComplexArray, FloatArray

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-14
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
PAIR_TOL = 1e-9
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Dense complex matrix equal to its conjugate transpose."""

    entries: ComplexArray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise InvalidArgumentError(f"expected a non-empty square matrix, got shape {entries.shape}")
        deviation = float(np.max(np.abs(entries - entries.conj().T)))
        if deviation > HERMITIAN_TOL:
            raise InvalidArgumentError(
                f"matrix is not Hermitian: max |H - H^H| = {deviation:.3e}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dimension(self) -> int:
        return int(self.entries.shape[0])

    @property
    def is_real(self) -> bool:
        return not np.any(self.entries.imag)

    def frobenius_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.entries) ** 2)))


def real_embedding(H: HermitianMatrix) -> FloatArray:
    """Real symmetric 2M x 2M matrix with the spectrum of H doubled."""
    re = H.entries.real
    im = H.entries.imag
    return np.block([[re, -im], [im, re]]).astype(np.float64)


def _off_norm(a: FloatArray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_symmetric(
    a: npt.ArrayLike,
    *,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> tuple[FloatArray, FloatArray]:
    """Eigenvalues (unsorted) and eigenvectors (columns) of a real symmetric matrix.

    Stops once the off-diagonal Frobenius norm drops below tol * ||A||_F.

    Raises:
        ConvergenceError: if max_sweeps sweeps are not enough.
    """
    work = np.array(a, dtype=np.float64)
    n = work.shape[0]
    vectors = np.eye(n)
    norm = float(np.sqrt(np.sum(work * work)))
    if norm == 0.0:
        return np.zeros(n), vectors
    threshold = tol * norm

    for sweep in range(max_sweeps):
        off = _off_norm(work)
        if off <= threshold:
            logger.debug("jacobi n=%d converged after %d sweeps (off=%.3e)", n, sweep, off)
            return np.diag(work).copy(), vectors
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if apq == 0.0:
                    continue
                theta = (work[q, q] - work[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, q] = work[q, p] = 0.0

                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q

    off = _off_norm(work)
    if off <= threshold:
        return np.diag(work).copy(), vectors
    logger.warning("jacobi n=%d did not converge in %d sweeps (off=%.3e)", n, max_sweeps, off)
    raise ConvergenceError(
        f"Jacobi did not converge after {max_sweeps} sweeps", sweeps=max_sweeps, off_norm=off
    )


def eigh_hermitian(H: HermitianMatrix) -> tuple[FloatArray, ComplexArray]:
    """Ascending eigenvalues and matching unit eigenvectors (columns) of H."""
    if H.is_real:
        values, vectors = jacobi_symmetric(H.entries.real)
        order = np.argsort(values, kind="stable")
        return values[order], vectors[:, order].astype(np.complex128)

    M = H.dimension
    values, vectors = jacobi_symmetric(real_embedding(H))
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]

    pair_tol = PAIR_TOL * max(1.0, H.frobenius_norm())
    gaps = np.abs(values[0::2] - values[1::2])
    if np.any(gaps > pair_tol):
        raise ConsistencyError(
            f"real embedding spectrum is not pairwise doubled (max gap {gaps.max():.3e})"
        )

    picked = vectors[:, 0::2]
    complex_vectors = picked[:M, :] + 1j * picked[M:, :]
    complex_vectors /= np.linalg.norm(complex_vectors, axis=0)
    return values[0::2].copy(), complex_vectors


def max_residual(H: HermitianMatrix, values: FloatArray, vectors: ComplexArray) -> float:
    """Largest ||H v - lambda v|| over the eigenpairs."""
    residual = H.entries @ vectors - vectors * values[np.newaxis, :]
    return float(np.max(np.linalg.norm(residual, axis=0)))


def eigenvalues_hermitian(H: HermitianMatrix) -> list[float]:
    """All eigenvalues of H in ascending order, residual-checked.

    Raises:
        ConsistencyError: if an eigenpair misses the residual bound.
    """
    values, vectors = eigh_hermitian(H)
    norm = H.frobenius_norm()
    if norm > 0.0:
        residual = max_residual(H, values, vectors)
        if residual > RESIDUAL_TOL * norm:
            raise ConsistencyError(
                f"eigenpair residual {residual:.3e} exceeds {RESIDUAL_TOL:g} * ||H||"
            )
    return [float(v) for v in values]
