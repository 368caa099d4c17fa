"""Unit tests for the verification layer."""

import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from ltiband.engines import band_sweep, lti_band_structure
from ltiband.exceptions import InvalidArgumentError
from ltiband.lattice import ImpulseResponse, LatticeParams, default_params, make_kgrid, nn_kernel
from ltiband.verify import (
    EquivalenceReport,
    GridSpec,
    check_circulant_identity,
    check_folding_completeness,
    compare_band_structures,
    compare_engines,
    run_verification,
    trace_folding,
    verify_fd_mapping,
)

DEFAULTS = default_params()
GRID = make_kgrid(0, math.pi, 64)


class TestCompareEngines:
    """Tests for analytic vs diagonalization equivalence."""

    @pytest.mark.parametrize("M", [1, 2, 3, 4])
    def test_reference_cells_pass(self, M: int) -> None:
        report = compare_engines(DEFAULTS, M, GRID)
        assert report.passed
        assert report.check == "lti-vs-tb"
        assert len(report.deviations) == GRID.count
        assert report.max_abs_deviation <= 1e-9

    def test_eight_site_cell_passes(self) -> None:
        assert compare_engines(DEFAULTS, 8, make_kgrid(0, math.pi, 16)).passed

    def test_impossible_tolerance_fails(self) -> None:
        """At 1e-30 the report fails with floating-point-scale deviations."""
        report = compare_engines(DEFAULTS, 4, GRID, tol=1e-30)
        assert not report.passed
        assert 0 < report.max_abs_deviation < 1e-12

    def test_zero_tolerance_rejected(self) -> None:
        with pytest.raises(InvalidArgumentError):
            compare_engines(DEFAULTS, 2, GRID, tol=0.0)

    def test_grid_mismatch_rejected(self) -> None:
        lti = lti_band_structure(DEFAULTS, 2, GRID)
        tb = band_sweep(DEFAULTS, 2, make_kgrid(0, 1, 8))
        with pytest.raises(InvalidArgumentError):
            compare_band_structures(lti, tb)


class TestIdentities:
    """Tests for the closed-form identity checks."""

    def test_fd_mapping(self) -> None:
        report = verify_fd_mapping(DEFAULTS, GRID, tol=1e-12)
        assert report.passed
        assert report.check == "fd-vs-lti"

    @pytest.mark.parametrize("M", [1, 2, 3, 4, 5, 6])
    def test_folding_completeness(self, M: int) -> None:
        """Branches neither lose nor duplicate primitive-cell states."""
        assert check_folding_completeness(DEFAULTS, M, GRID).passed

    def test_fold_trace_report(self) -> None:
        report = trace_folding(DEFAULTS, 3, GRID)
        assert report.passed
        assert [b.branch for b in report.branches] == [-2, 0, 2]
        first = report.branches[0]
        assert len(first.k_pc) == GRID.count
        assert first.k_pc[0] == pytest.approx(-2 * math.pi / 3)

    def test_circulant_identity(self) -> None:
        report = check_circulant_identity(nn_kernel(DEFAULTS), 8)
        assert report.passed
        assert report.kernel == [DEFAULTS.beta, DEFAULTS.alpha, DEFAULTS.beta]

    def test_circulant_identity_random_kernels(self) -> None:
        """100 random symmetric 3-tap kernels on rings of 3..32 sites."""
        rng = np.random.default_rng(23)
        for _ in range(100):
            side, center = (float(v) for v in rng.uniform(-1, 1, size=2))
            N = int(rng.integers(3, 33))
            report = check_circulant_identity(ImpulseResponse((side, center, side)), N)
            assert report.passed, report
            assert report.max_abs_deviation <= 1e-10

    def test_non_default_lattice_constant(self) -> None:
        p = LatticeParams(alpha=0.2, beta=0.4, a=2.5)
        assert trace_folding(p, 4, GRID).passed
        assert check_folding_completeness(p, 4, GRID).passed
        assert compare_engines(p, 4, make_kgrid(-1, 1, 16)).passed


class TestReports:
    """Tests for the report models."""

    def test_passed_must_match_deviation(self) -> None:
        with pytest.raises(ValidationError):
            EquivalenceReport(
                check="lti-vs-tb",
                cell_size=1,
                grid=GridSpec.of(GRID),
                tolerance=1e-9,
                max_abs_deviation=1.0,
                deviations=[1.0],
                passed=True,
            )

    def test_suite(self) -> None:
        """The bundled suite passes and serializes its overall verdict."""
        suite = run_verification(DEFAULTS, [1, 2, 3, 4], make_kgrid(0, math.pi, 32))
        assert suite.passed
        assert [r.cell_size for r in suite.equivalence] == [1, 2, 3, 4]
        assert len(suite.completeness) == len(suite.fold_traces) == 4
        data = json.loads(suite.model_dump_json())
        assert data["passed"] is True
        assert data["fd_mapping"]["passed"] is True

    def test_suite_fails_with_one_bad_report(self) -> None:
        suite = run_verification(DEFAULTS, [4], GRID, tol=1e-30)
        assert not suite.passed
