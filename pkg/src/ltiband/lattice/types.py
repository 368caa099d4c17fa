"""
Value types shared by every engine.

All types are frozen after construction. Array-valued fields are stored as
read-only numpy arrays so that instances can be shared between threads.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
import numpy.typing as npt

from ..exceptions import InvalidArgumentError

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]

BranchLabel = int | str

# Longest min..max position range a spike train may densify to.
MAX_DENSE_SPAN = 1 << 20


class Engine(str, Enum):
    LTI = "lti"
    TB = "tb"
    FD = "fd"


def _frozen(array: npt.ArrayLike, dtype: type = np.float64) -> FloatArray:
    out = np.array(array, dtype=dtype)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class LatticeParams:
    """Nearest-neighbor tight-binding chain: on-site alpha, hopping beta (eV), spacing a."""

    alpha: float
    beta: float
    a: float = 1.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "a"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.a <= 0:
            raise InvalidArgumentError(f"lattice constant a must be positive, got {self.a!r}")

    @property
    def band_bounds(self) -> tuple[float, float]:
        """Energy window every band of this chain lies in."""
        half_width = 2.0 * abs(self.beta)
        return self.alpha - half_width, self.alpha + half_width


@dataclass(frozen=True)
class Spike:
    """A weighted delta at an integer multiple of the lattice constant."""

    position: int
    weight: float = 1.0


@dataclass(frozen=True)
class SpikeTrain:
    """A unit or super cell as a finite sum of weighted deltas."""

    spikes: tuple[Spike, ...]

    def __post_init__(self) -> None:
        if not self.spikes:
            raise InvalidArgumentError("spike train must contain at least one spike")
        positions = [s.position for s in self.spikes]
        if any(b <= a for a, b in zip(positions, positions[1:], strict=False)):
            raise InvalidArgumentError(
                f"spike positions must be strictly increasing, got {positions}"
            )
        if not all(math.isfinite(s.weight) for s in self.spikes):
            raise InvalidArgumentError("spike weights must be finite")

    def __len__(self) -> int:
        return len(self.spikes)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(s.position for s in self.spikes)

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(s.weight for s in self.spikes)

    @property
    def span(self) -> int:
        return self.spikes[-1].position - self.spikes[0].position + 1

    def dense(self) -> tuple[FloatArray, int]:
        """Weights on the contiguous range min..max position, and that range's first position.

        Raises:
            InvalidArgumentError: if the range is longer than MAX_DENSE_SPAN.
        """
        if self.span > MAX_DENSE_SPAN:
            raise InvalidArgumentError(
                f"spike train spans {self.span} sites, more than the {MAX_DENSE_SPAN} "
                f"a dense convolution supports"
            )
        origin = self.spikes[0].position
        out = np.zeros(self.span, dtype=np.float64)
        for spike in self.spikes:
            out[spike.position - origin] = spike.weight
        return out, origin

    def dtft(self, k: float, a: float = 1.0) -> complex:
        """Sum of w_m * exp(-j k m a) over the spikes."""
        return complex(
            sum(s.weight * np.exp(-1j * k * s.position * a) for s in self.spikes)
        )


@dataclass(frozen=True)
class ImpulseResponse:
    """Odd-length symmetric kernel centered at offset 0, in eV."""

    taps: tuple[float, ...]

    def __post_init__(self) -> None:
        n = len(self.taps)
        if n % 2 == 0:
            raise InvalidArgumentError(f"kernel length must be odd, got {n}")
        if not all(math.isfinite(t) for t in self.taps):
            raise InvalidArgumentError("kernel taps must be finite")
        if any(self.taps[i] != self.taps[n - 1 - i] for i in range(n // 2)):
            raise InvalidArgumentError(f"kernel must be symmetric, got {list(self.taps)}")

    @property
    def half_width(self) -> int:
        return len(self.taps) // 2

    @property
    def offsets(self) -> range:
        return range(-self.half_width, self.half_width + 1)

    def as_array(self) -> FloatArray:
        return np.asarray(self.taps, dtype=np.float64)

    def dtft(self, k: float, a: float = 1.0) -> complex:
        """Direct-summation DTFT: sum of h[d] * exp(-j k d a)."""
        return complex(
            sum(tap * np.exp(-1j * k * d * a) for d, tap in zip(self.offsets, self.taps, strict=True))
        )


@dataclass(frozen=True)
class KGrid:
    """Uniform inclusive grid of crystal momenta, radians per lattice unit."""

    k_min: float
    k_max: float
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise InvalidArgumentError(f"k-grid needs at least 2 points, got {self.count}")
        if not (math.isfinite(self.k_min) and math.isfinite(self.k_max)):
            raise InvalidArgumentError("k-grid bounds must be finite")
        if self.k_min >= self.k_max:
            raise InvalidArgumentError(
                f"k_min must be below k_max, got [{self.k_min!r}, {self.k_max!r}]"
            )

    @cached_property
    def points(self) -> FloatArray:
        return _frozen(np.linspace(self.k_min, self.k_max, self.count))

    def __len__(self) -> int:
        return self.count


@dataclass(frozen=True, eq=False)
class BandStructure:
    """Energies per k (rows) and branch (columns), with a provenance label per column."""

    kgrid: KGrid
    energies: FloatArray
    labels: tuple[BranchLabel, ...]
    engine: Engine
    params: LatticeParams
    cell_size: int
    # Seconds spent producing the energies; not part of any serialized form.
    wall_time: float | None = None

    def __post_init__(self) -> None:
        energies = _frozen(self.energies)
        object.__setattr__(self, "energies", energies)
        expected = (self.kgrid.count, self.cell_size)
        if energies.shape != expected:
            raise InvalidArgumentError(
                f"band energies must have shape {expected}, got {energies.shape}"
            )
        if len(self.labels) != self.cell_size:
            raise InvalidArgumentError(
                f"expected {self.cell_size} branch labels, got {len(self.labels)}"
            )
        lo, hi = self.params.band_bounds
        # Solver noise scales with the Hamiltonian norm.
        slack = 1e-9 * max(1.0, abs(self.params.alpha) + 2.0 * abs(self.params.beta))
        if energies.size and (energies.min() < lo - slack or energies.max() > hi + slack):
            raise InvalidArgumentError(
                f"energies leave the band window [{lo}, {hi}] eV: "
                f"[{energies.min()}, {energies.max()}]"
            )

    def band(self, index: int) -> FloatArray:
        """Energies of one column across the grid."""
        return self.energies[:, index]

    def sorted_energies(self) -> FloatArray:
        """Per-k ascending energies (the multiset every comparison uses)."""
        return np.sort(self.energies, axis=1)
