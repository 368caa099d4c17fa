"""
Output handling for the CLI.

Artifacts (CSV, JSON, SVG) go to stdout or to --out; status messages, tables
and log records go to stderr so piping an artifact never mixes in chatter.
"""

import logging
import os
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from ..bench import BenchReport
from ..engines import ConvolutionOutput
from ..exceptions import OutputError
from ..lattice import BandStructure
from ..verify import VerificationSuite
from .serialize import write_band_csv, write_band_json
from .svg import render_band_svg

# Respect NO_COLOR environment variable
_no_color = os.environ.get("NO_COLOR", "") != ""

console = Console(legacy_windows=False, no_color=_no_color, highlight=False, soft_wrap=True)
error_console = Console(stderr=True, legacy_windows=False, no_color=_no_color)


def setup_logging(verbose: bool = False) -> None:
    """Route library logging through rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=error_console, show_path=verbose, markup=False)],
        force=True,
    )


def print_error(message: str) -> None:
    """Print an error message."""
    error_console.print(f"[red]Error:[/red] {escape(message)}")


def print_success(message: str) -> None:
    """Print a success message."""
    error_console.print(f"[green]{escape(message)}[/green]")


def print_info(message: str) -> None:
    """Print an info message."""
    error_console.print(f"[blue]{escape(message)}[/blue]")


def print_field_errors(fields: list[tuple[str, str]]) -> None:
    for name, message in fields:
        error_console.print(f"  [yellow]{escape(name)}[/yellow]: {escape(message)}")


class ArtifactWriter:
    """Write one artifact to a file or stdout."""

    def __init__(self, out: Path | None = None):
        self.out = out

    def write(self, text: str) -> None:
        if self.out is None:
            console.out(text, end="")
            return
        try:
            self.out.parent.mkdir(parents=True, exist_ok=True)
            with open(self.out, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as e:
            raise OutputError(f"cannot write {self.out}: {e.strerror or e}") from e
        print_success(f"Wrote {self.out}")


def render_bands(structures: list[BandStructure], format: str) -> str:
    if format == "json":
        return write_band_json(structures)
    if format == "svg":
        return render_band_svg(structures)
    return write_band_csv(structures)


def _mark(passed: bool) -> str:
    return "[green]pass[/green]" if passed else "[red]FAIL[/red]"


def print_verification_table(suite: VerificationSuite) -> None:
    table = Table(title="Verification")
    table.add_column("check")
    table.add_column("M", justify="right")
    table.add_column("max |dev|", justify="right")
    table.add_column("tol", justify="right")
    table.add_column("result")

    for report in [*suite.equivalence, *suite.completeness]:
        table.add_row(
            report.check,
            str(report.cell_size),
            f"{report.max_abs_deviation:.3e}",
            f"{report.tolerance:.0e}",
            _mark(report.passed),
        )
    for trace in suite.fold_traces:
        worst = max((b.max_residual for b in trace.branches), default=0.0)
        table.add_row(
            "fold-trace", str(trace.cell_size), f"{worst:.3e}", f"{trace.tolerance:.0e}", _mark(trace.passed)
        )
    if suite.fd_mapping is not None:
        fd = suite.fd_mapping
        table.add_row(
            fd.check,
            str(fd.cell_size),
            f"{fd.max_abs_deviation:.3e}",
            f"{fd.tolerance:.0e}",
            _mark(fd.passed),
        )
    error_console.print(table)


def print_bench_table(report: BenchReport) -> None:
    table = Table(title="Benchmark (median wall time)")
    table.add_column("M", justify="right")
    table.add_column("N", justify="right")
    table.add_column("tb [s]", justify="right")
    table.add_column("lti [s]", justify="right")
    table.add_column("speedup", justify="right")
    for r in report.results:
        table.add_row(
            str(r.cell_size),
            str(r.grid_size),
            f"{r.tb_wall_time:.3e}",
            f"{r.lti_wall_time:.3e}",
            f"{r.speedup:.1f}x",
        )
    error_console.print(table)
    if report.tb_exponent is not None and report.lti_exponent is not None:
        error_console.print(
            f"per-k cost exponent in M: tb {report.tb_exponent:.2f}, lti {report.lti_exponent:.2f}"
        )
    for warning in report.warnings:
        error_console.print(f"[yellow]Warning:[/yellow] {escape(warning)}")


def print_convolution(output: ConvolutionOutput, fourier: list[tuple[float, complex]]) -> None:
    taps = Table(title="Convolution taps")
    taps.add_column("offset", justify="right")
    taps.add_column("value", justify="right")
    for offset, value in output.taps:
        taps.add_row(str(offset), repr(value))
    console.print(taps)

    values = Table(title="Fourier transform of the output")
    values.add_column("k", justify="right")
    values.add_column("Re", justify="right")
    values.add_column("Im", justify="right")
    for k, value in fourier:
        values.add_row(repr(k), repr(value.real), repr(value.imag))
    console.print(values)
