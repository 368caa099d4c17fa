"""
Timing harness: per-k diagonalization sweep against analytic branch evaluation.

Both paths run on identical grids and parameters, and every timed pair is
checked for equal spectra before its timings are kept.
"""

import asyncio
import csv
import io
import logging
import math
import time
from collections.abc import Callable, Sequence
from typing import Self

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..engines import band_sweep, band_sweep_concurrent, lti_band_structure
from ..exceptions import ConsistencyError, InvalidArgumentError
from ..lattice import BandStructure, KGrid, LatticeParams, make_kgrid
from ..verify import DEFAULT_TOLERANCE, compare_band_structures

logger = logging.getLogger(__name__)

MIN_REPETITIONS = 3
MIN_TIMER_TICKS = 100

CSV_HEADER = ("cell_size", "grid_size", "repetition", "engine", "wall_time_s")


class BenchResult(BaseModel):
    """Median timings of both paths for one (M, N)."""

    cell_size: int
    grid_size: int
    repetitions: int
    parallel: bool = False
    tb_wall_time: float
    lti_wall_time: float
    speedup: float
    tb_per_k: float
    lti_per_k: float
    tb_samples: list[float]
    lti_samples: list[float]
    warnings: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _positive(self) -> Self:
        if self.tb_wall_time <= 0 or self.lti_wall_time <= 0:
            raise ValueError("wall times must be positive")
        return self


class BenchReport(BaseModel):
    alpha: float
    beta: float
    a: float
    results: list[BenchResult]
    tb_exponent: float | None = None
    lti_exponent: float | None = None
    warnings: list[str] = Field(default_factory=list)

    def to_csv(self) -> str:
        """Raw timings, one row per repetition and engine."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.results:
            for engine, samples in (("tb", r.tb_samples), ("lti", r.lti_samples)):
                for n, seconds in enumerate(samples):
                    writer.writerow((r.cell_size, r.grid_size, n, engine, repr(seconds)))
        return buffer.getvalue()


def fit_scaling_exponent(cell_sizes: Sequence[int], per_k_costs: Sequence[float]) -> float:
    """Least-squares slope of log(cost) against log(M)."""
    if len(cell_sizes) != len(per_k_costs):
        raise InvalidArgumentError("cell sizes and costs must have equal length")
    if len(set(cell_sizes)) < 2:
        raise InvalidArgumentError("need at least two distinct cell sizes to fit an exponent")
    if any(c <= 0 for c in per_k_costs) or any(m <= 0 for m in cell_sizes):
        raise InvalidArgumentError("cell sizes and costs must be positive")
    slope, _ = np.polyfit(np.log(np.asarray(cell_sizes, dtype=np.float64)), np.log(per_k_costs), 1)
    return float(slope)


def _timed(func: Callable[[], BandStructure]) -> tuple[BandStructure, float]:
    start = time.perf_counter()
    result = func()
    return result, time.perf_counter() - start


def _bench_one(
    params: LatticeParams,
    M: int,
    grid: KGrid,
    repetitions: int,
    parallel: bool,
    workers: int,
    tol: float,
) -> BenchResult:
    def tb() -> BandStructure:
        if parallel:
            return asyncio.run(band_sweep_concurrent(params, M, grid, workers))
        return band_sweep(params, M, grid)

    def lti() -> BandStructure:
        return lti_band_structure(params, M, grid)

    # warm-up, not recorded
    tb()
    lti()

    tb_samples: list[float] = []
    lti_samples: list[float] = []
    for _ in range(repetitions):
        tb_bands, tb_time = _timed(tb)
        lti_bands, lti_time = _timed(lti)
        report = compare_band_structures(lti_bands, tb_bands, tol)
        if not report.passed:
            raise ConsistencyError(
                f"benchmark paths disagree by {report.max_abs_deviation:.3e} eV (M={M}, N={grid.count})"
            )
        tb_samples.append(tb_time)
        lti_samples.append(lti_time)

    resolution = time.get_clock_info("perf_counter").resolution
    tb_median = max(float(np.median(tb_samples)), resolution)
    lti_median = max(float(np.median(lti_samples)), resolution)

    warnings: list[str] = []
    for name, median in (("tb", tb_median), ("lti", lti_median)):
        if median < MIN_TIMER_TICKS * resolution:
            message = (
                f"{name} timing at M={M}, N={grid.count} is within {MIN_TIMER_TICKS} timer ticks; "
                "widen N or repetitions"
            )
            logger.warning(message)
            warnings.append(message)

    return BenchResult(
        cell_size=M,
        grid_size=grid.count,
        repetitions=repetitions,
        parallel=parallel,
        tb_wall_time=tb_median,
        lti_wall_time=lti_median,
        speedup=tb_median / lti_median,
        tb_per_k=tb_median / grid.count,
        lti_per_k=lti_median / grid.count,
        tb_samples=tb_samples,
        lti_samples=lti_samples,
        warnings=warnings,
    )


def run_bench(
    params: LatticeParams,
    cell_sizes: Sequence[int],
    grid_sizes: Sequence[int],
    repetitions: int = 5,
    *,
    k_min: float = 0.0,
    k_max: float = math.pi,
    parallel: bool = False,
    workers: int = 4,
    tol: float = DEFAULT_TOLERANCE,
) -> BenchReport:
    """Median-of-repetitions timings for every (M, N) pair.

    With two or more distinct M the per-k cost at the largest N is fitted to a
    power law in M for each path.
    """
    if repetitions < MIN_REPETITIONS:
        raise InvalidArgumentError(
            f"need at least {MIN_REPETITIONS} repetitions, got {repetitions}"
        )
    if not cell_sizes or not grid_sizes:
        raise InvalidArgumentError("need at least one cell size and one grid size")

    results: list[BenchResult] = []
    for M in cell_sizes:
        for N in grid_sizes:
            grid = make_kgrid(k_min, k_max, N)
            result = _bench_one(params, M, grid, repetitions, parallel, workers, tol)
            logger.debug(
                "bench M=%d N=%d tb=%.3es lti=%.3es", M, N, result.tb_wall_time, result.lti_wall_time
            )
            results.append(result)

    report = BenchReport(
        alpha=params.alpha,
        beta=params.beta,
        a=params.a,
        results=results,
        warnings=[w for r in results for w in r.warnings],
    )
    distinct = sorted(set(cell_sizes))
    if len(distinct) >= 2:
        largest = max(grid_sizes)
        at_largest = {r.cell_size: r for r in results if r.grid_size == largest}
        report.tb_exponent = fit_scaling_exponent(
            distinct, [at_largest[m].tb_per_k for m in distinct]
        )
        report.lti_exponent = fit_scaling_exponent(
            distinct, [at_largest[m].lti_per_k for m in distinct]
        )
    return report
