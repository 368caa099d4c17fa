"""Benchmark harness for the diagonalization and analytic paths."""

from .harness import BenchReport, BenchResult, fit_scaling_exponent, run_bench

__all__ = [
    "BenchReport",
    "BenchResult",
    "fit_scaling_exponent",
    "run_bench",
]
