"""Lattice types, cells and k-grids."""

from .cells import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    branch_indices,
    canonical_cell,
    canonical_positions,
    default_params,
    make_kgrid,
    nn_kernel,
    spike_train,
    wide_zone_grid,
)
from .types import (
    MAX_DENSE_SPAN,
    BandStructure,
    BranchLabel,
    ComplexArray,
    Engine,
    FloatArray,
    ImpulseResponse,
    KGrid,
    LatticeParams,
    Spike,
    SpikeTrain,
)

__all__ = [
    "DEFAULT_ALPHA",
    "DEFAULT_BETA",
    "MAX_DENSE_SPAN",
    "BandStructure",
    "BranchLabel",
    "ComplexArray",
    "Engine",
    "FloatArray",
    "ImpulseResponse",
    "KGrid",
    "LatticeParams",
    "Spike",
    "SpikeTrain",
    "branch_indices",
    "canonical_cell",
    "canonical_positions",
    "default_params",
    "make_kgrid",
    "nn_kernel",
    "spike_train",
    "wide_zone_grid",
]
