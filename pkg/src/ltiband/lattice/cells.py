"""
Constructors for cells, kernels and k-grids.
"""

import math
from collections.abc import Sequence
from numbers import Integral

from ..exceptions import InvalidArgumentError
from .types import ImpulseResponse, KGrid, LatticeParams, Spike, SpikeTrain

# Reference chain parameters (eV).
DEFAULT_ALPHA = -0.17
DEFAULT_BETA = -0.24

# Four zone widths either side of k = 0.
WIDE_ZONE_K_MIN = -4 * math.pi
WIDE_ZONE_K_MAX = 4 * math.pi
WIDE_ZONE_COUNT = 256


def default_params() -> LatticeParams:
    return LatticeParams(alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA, a=1.0)


def _check_cell_size(M: int) -> None:
    if isinstance(M, bool) or not isinstance(M, int) or M < 1:
        raise InvalidArgumentError(f"cell size must be a positive integer, got {M!r}")


def canonical_positions(M: int) -> range:
    """Contiguous integers with 0 included and the positive side at least as long."""
    _check_cell_size(M)
    lo = -((M - 1) // 2)
    return range(lo, lo + M)


def canonical_cell(M: int) -> SpikeTrain:
    """Unit-weight spike train of an M-site cell, one site at the origin."""
    return SpikeTrain(tuple(Spike(position=m) for m in canonical_positions(M)))


def branch_indices(M: int) -> tuple[int, ...]:
    """Branch labels i = 2m over the canonical positions m."""
    return tuple(2 * m for m in canonical_positions(M))


def spike_train(positions: Sequence[int], weights: Sequence[float] | None = None) -> SpikeTrain:
    """Build an arbitrary (optionally weighted) spike train."""
    if weights is None:
        weights = [1.0] * len(positions)
    if len(weights) != len(positions):
        raise InvalidArgumentError(
            f"got {len(positions)} positions but {len(weights)} weights"
        )
    return SpikeTrain(
        tuple(
            Spike(position=_as_position(p), weight=float(w))
            for p, w in zip(positions, weights, strict=True)
        )
    )


def _as_position(p: float) -> int:
    if isinstance(p, Integral) and not isinstance(p, bool):
        return int(p)
    if isinstance(p, bool) or not float(p).is_integer():
        raise InvalidArgumentError(f"spike positions must be integers, got {p!r}")
    return int(p)


def nn_kernel(params: LatticeParams) -> ImpulseResponse:
    """Nearest-neighbor impulse response [beta, alpha, beta]."""
    return ImpulseResponse((params.beta, params.alpha, params.beta))


def make_kgrid(k_min: float, k_max: float, count: int) -> KGrid:
    return KGrid(k_min=float(k_min), k_max=float(k_max), count=int(count))


def wide_zone_grid() -> KGrid:
    return make_kgrid(WIDE_ZONE_K_MIN, WIDE_ZONE_K_MAX, WIDE_ZONE_COUNT)
