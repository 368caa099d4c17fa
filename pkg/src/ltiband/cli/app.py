"""
Main CLI application for ltiband.
"""

import asyncio
import io
import json
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer

# Fix Windows console encoding for Unicode support
if sys.platform == "win32":
    # Only wrap if not already wrapped (avoids breaking pytest capture)
    if hasattr(sys.stdout, "buffer") and not isinstance(sys.stdout, io.TextIOWrapper):
        sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", errors="replace")
    if hasattr(sys.stderr, "buffer") and not isinstance(sys.stderr, io.TextIOWrapper):
        sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding="utf-8", errors="replace")

from ..bench import run_bench
from ..cellexpr import format_cell, parse_cell
from ..config import CONFIG_ENV_VAR, RunConfig, config_file_path, resolve_config
from ..engines import band_sweep_concurrent, convolve, fourier_of_output, get_engine
from ..exceptions import ConfigError, LtibandError, OutputError, VerificationError
from ..lattice import BandStructure, nn_kernel
from ..verify import run_verification
from .output import (
    ArtifactWriter,
    console,
    print_bench_table,
    print_convolution,
    print_error,
    print_field_errors,
    print_info,
    print_success,
    print_verification_table,
    render_bands,
    setup_logging,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="ltiband",
    help="Band structures of a 1D atomic chain by convolution and by diagonalization",
    no_args_is_help=True,
)

ALL_ENGINES = ("lti", "tb", "fd")
VERIFY_CELL_SIZES = [1, 2, 3, 4]
BENCH_CELL_SIZES = [4]

EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_VERIFY = 3


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
) -> None:
    """ltiband - band structures of a 1D chain, analytic and by diagonalization"""
    setup_logging(verbose)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library exceptions to process exit codes."""
    try:
        yield
    except ConfigError as e:
        print_error(str(e))
        print_field_errors(e.fields)
        raise typer.Exit(EXIT_CONFIG) from None
    except OutputError as e:
        print_error(str(e))
        raise typer.Exit(EXIT_IO) from None
    except VerificationError as e:
        print_error(str(e))
        raise typer.Exit(EXIT_VERIFY) from None
    except LtibandError as e:
        logger.debug("command failed", exc_info=True)
        print_error(str(e))
        raise typer.Exit(EXIT_CONFIG) from None


def _chain_overrides(alpha: float | None, beta: float | None, a: float | None) -> dict[str, Any]:
    return {"alpha": alpha, "beta": beta, "a": a}


def _grid_overrides(k_min: float | None, k_max: float | None, k_count: int | None) -> dict[str, Any]:
    return {"k_min": k_min, "k_max": k_max, "k_count": k_count}


def compute_bands(config: RunConfig) -> list[BandStructure]:
    """Run the configured engine(s); engine=all yields lti, tb, fd in that order."""
    params = config.lattice_params()
    grid = config.kgrid()
    names = ALL_ENGINES if config.engine == "all" else (config.engine,)

    structures: list[BandStructure] = []
    for name in names:
        if name == "tb" and config.parallel:
            bands = asyncio.run(band_sweep_concurrent(params, config.cell_size, grid))
        else:
            sweep = get_engine(name)
            if sweep is None:
                raise ConfigError(f"unknown engine: {name}", fields=[("engine", name)])
            bands = sweep(params, config.cell_size, grid)
        logger.debug("%s sweep M=%d N=%d done", name, config.cell_size, grid.count)
        structures.append(bands)
    return structures


# === Band structure ===


@app.command("band")
def cmd_band(
    alpha: float | None = typer.Option(None, "--alpha", help="On-site energy alpha [eV]"),
    beta: float | None = typer.Option(None, "--beta", help="Hopping energy beta [eV]"),
    a: float | None = typer.Option(None, "--a", help="Lattice constant"),
    cell_size: int | None = typer.Option(None, "--cell-size", "-M", help="Atoms per supercell"),
    engine: str | None = typer.Option(None, "--engine", "-e", help="lti, tb, fd or all"),
    k_min: float | None = typer.Option(None, "--k-min", help="Lower end of the k-grid"),
    k_max: float | None = typer.Option(None, "--k-max", help="Upper end of the k-grid"),
    k_count: int | None = typer.Option(None, "--k-count", "-n", help="Number of k-points"),
    format: str | None = typer.Option(None, "--format", "-f", help="csv, json or svg"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (default: stdout)"),
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
    parallel: bool = typer.Option(False, "--parallel", help="Diagonalize k-points on worker threads"),
) -> None:
    """Compute a band structure and write it as CSV, JSON or SVG.

    Examples:
        ltiband band
        ltiband band --cell-size 2 --engine all --format svg --out fold.svg
        ltiband band -M 3 --engine tb --format json
    """
    with _exit_codes():
        config = resolve_config(
            config_path,
            {
                **_chain_overrides(alpha, beta, a),
                **_grid_overrides(k_min, k_max, k_count),
                "cell_size": cell_size,
                "engine": engine,
                "format": format,
                "out": out,
                "parallel": parallel or None,
            },
        )
        structures = compute_bands(config)
        ArtifactWriter(config.out).write(render_bands(structures, config.format))


# === Verification ===


@app.command("verify")
def cmd_verify(
    alpha: float | None = typer.Option(None, "--alpha", help="On-site energy alpha [eV]"),
    beta: float | None = typer.Option(None, "--beta", help="Hopping energy beta [eV]"),
    a: float | None = typer.Option(None, "--a", help="Lattice constant"),
    cell_sizes: list[int] | None = typer.Option(
        None, "--cell-size", "-M", help="Cell size to check (repeatable, default 1..4)"
    ),
    k_min: float | None = typer.Option(None, "--k-min", help="Lower end of the k-grid"),
    k_max: float | None = typer.Option(None, "--k-max", help="Upper end of the k-grid"),
    k_count: int | None = typer.Option(None, "--k-count", "-n", help="Number of k-points"),
    tol: float | None = typer.Option(None, "--tol", help="Equivalence tolerance [eV]"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Report file (default: stdout)"),
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
) -> None:
    """Check the analytic bands against diagonalization and write a JSON report.

    Exit code 3 when any check fails; the report is written either way.

    Examples:
        ltiband verify
        ltiband verify -M 8 --out report.json
    """
    with _exit_codes():
        config = resolve_config(
            config_path,
            {
                **_chain_overrides(alpha, beta, a),
                **_grid_overrides(k_min, k_max, k_count),
                "tol": tol,
                "out": out,
            },
        )
        sizes = config.cell_sizes(cell_sizes, VERIFY_CELL_SIZES)
        suite = run_verification(config.lattice_params(), sizes, config.kgrid(), config.tol)
        report = json.dumps(suite.model_dump(mode="json"), indent=2) + "\n"
        ArtifactWriter(config.out).write(report)
        print_verification_table(suite)
        if not suite.passed:
            raise VerificationError("verification failed", report=suite)
        print_success("All checks passed")


# === Benchmark ===


@app.command("bench")
def cmd_bench(
    alpha: float | None = typer.Option(None, "--alpha", help="On-site energy alpha [eV]"),
    beta: float | None = typer.Option(None, "--beta", help="Hopping energy beta [eV]"),
    a: float | None = typer.Option(None, "--a", help="Lattice constant"),
    cell_sizes: list[int] | None = typer.Option(
        None, "--cell-size", "-M", help="Cell size to time (repeatable, default 4)"
    ),
    k_counts: list[int] | None = typer.Option(
        None, "--k-count", "-n", help="Grid size to time (repeatable, default 256)"
    ),
    k_min: float | None = typer.Option(None, "--k-min", help="Lower end of the k-grid"),
    k_max: float | None = typer.Option(None, "--k-max", help="Upper end of the k-grid"),
    repetitions: int | None = typer.Option(None, "--repetitions", "-r", help="Timed runs per case (>= 3)"),
    format: str = typer.Option("json", "--format", "-f", help="json or csv (raw timings)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output file (default: stdout)"),
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
    parallel: bool = typer.Option(False, "--parallel", help="Time the threaded diagonalization sweep"),
) -> None:
    """Time per-k diagonalization against analytic branch evaluation.

    Examples:
        ltiband bench
        ltiband bench -M 2 -M 4 -M 8 -M 16 --format csv --out scaling.csv
    """
    with _exit_codes():
        if format not in ("json", "csv"):
            raise ConfigError(f"bench format must be json or csv, got {format!r}", fields=[("format", format)])
        config = resolve_config(
            config_path,
            {
                **_chain_overrides(alpha, beta, a),
                **_grid_overrides(k_min, k_max, None),
                "repetitions": repetitions,
                "out": out,
                "parallel": parallel or None,
            },
        )
        sizes = config.cell_sizes(cell_sizes, BENCH_CELL_SIZES)
        grids = list(k_counts) if k_counts else [config.k_count]
        if any(n < 2 for n in grids):
            raise ConfigError("every --k-count must be at least 2", fields=[("k_count", str(grids))])

        report = run_bench(
            config.lattice_params(),
            sizes,
            grids,
            config.repetitions,
            k_min=config.k_min,
            k_max=config.k_max,
            parallel=config.parallel,
            tol=config.tol,
        )
        text = report.to_csv() if format == "csv" else report.model_dump_json(indent=2) + "\n"
        ArtifactWriter(config.out).write(text)
        print_bench_table(report)


# === Spike-train convolution ===


@app.command("convolve")
def cmd_convolve(
    expression: str = typer.Argument(..., help="Cell as spike train, e.g. 'δ[x + a] + δ[x]'"),
    alpha: float | None = typer.Option(None, "--alpha", help="On-site energy alpha [eV]"),
    beta: float | None = typer.Option(None, "--beta", help="Hopping energy beta [eV]"),
    a: float | None = typer.Option(None, "--a", help="Lattice constant"),
    k: list[float] | None = typer.Option(None, "--k", help="Evaluate the Fourier transform here (repeatable)"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of tables"),
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
) -> None:
    """Convolve a spike-train cell with the nearest-neighbor kernel [beta, alpha, beta].

    Examples:
        ltiband convolve "δ[x + a] + δ[x]"
        ltiband convolve "d[x+a] + d[x] + d[x-a]" --k 0 --k 3.14159
    """
    with _exit_codes():
        config = resolve_config(config_path, _chain_overrides(alpha, beta, a))
        params = config.lattice_params()
        train = parse_cell(expression)
        output = convolve(train, nn_kernel(params))
        points = list(k) if k else [0.0]
        fourier = [(kk, fourier_of_output(output, kk, params.a)) for kk in points]

        if as_json:
            doc = {
                "cell": format_cell(train),
                "kernel": list(output.kernel.taps),
                "taps": [{"offset": o, "value": v} for o, v in output.taps],
                "fourier": [{"k": kk, "re": f.real, "im": f.imag} for kk, f in fourier],
            }
            console.out(json.dumps(doc, indent=2, ensure_ascii=False))
            return
        print_info(f"cell: {format_cell(train)}")
        print_convolution(output, fourier)


# === Config Commands ===

config_app = typer.Typer(help="Inspect ltiband configuration")
app.add_typer(config_app, name="config")


@config_app.command("show")
def cmd_config_show(
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
) -> None:
    """Show the resolved configuration (defaults merged with the config file)."""
    with _exit_codes():
        config = resolve_config(config_path)
        console.out(config.model_dump_json(indent=2))


@config_app.command("path")
def cmd_config_path(
    config_path: Path | None = typer.Option(None, "--config", help="JSON config file"),
) -> None:
    """Show which configuration file applies."""
    path = config_file_path(config_path)
    if path is None:
        console.out(f"none (built-in defaults; set --config or {CONFIG_ENV_VAR})")
    else:
        console.out(str(path))


@config_app.command("init")
def cmd_config_init(
    path: Path = typer.Argument(..., help="Where to write the default configuration"),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing file"),
) -> None:
    """Write the built-in defaults to a JSON config file."""
    with _exit_codes():
        if path.exists() and not force:
            raise ConfigError(f"{path} already exists (use --force)", fields=[("path", str(path))])
        try:
            RunConfig().save(path)
        except OSError as e:
            raise OutputError(f"cannot write {path}: {e.strerror or e}") from e
        print_success(f"Wrote {path}")


if __name__ == "__main__":
    app()
