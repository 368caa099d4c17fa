"""Unit tests for the finite-difference engine and the engine registry."""

import math

import numpy as np
import pytest

from ltiband.engines import (
    FDParams,
    dispersion_pc,
    fd_band_structure,
    fd_circulant_eigs,
    fd_dispersion,
    fd_params_from_lattice,
    fd_sweep,
    get_engine,
    list_engines,
    lti_band_structure,
)
from ltiband.exceptions import InvalidArgumentError
from ltiband.lattice import Engine, default_params, make_kgrid

DEFAULTS = default_params()


class TestFDMapping:
    """Tests for the 2 t0 + U = alpha, -t0 = beta mapping."""

    def test_reference_mapping(self) -> None:
        """alpha = -0.17, beta = -0.24 maps to t0 = 0.24, U = -0.65."""
        fd = fd_params_from_lattice(DEFAULTS)
        assert fd.t0 == pytest.approx(0.24)
        assert fd.U == pytest.approx(-0.65)

    def test_back_to_lattice(self) -> None:
        p = fd_params_from_lattice(DEFAULTS).as_lattice()
        assert p.alpha == pytest.approx(DEFAULTS.alpha)
        assert p.beta == pytest.approx(DEFAULTS.beta)

    def test_kernel(self) -> None:
        assert FDParams(t0=1.0, U=0.5).kernel().taps == (-1.0, 2.5, -1.0)

    def test_dispersion_matches_tight_binding(self) -> None:
        fd = fd_params_from_lattice(DEFAULTS)
        for k in np.linspace(-math.pi, math.pi, 41):
            assert abs(fd_dispersion(fd, float(k)) - dispersion_pc(DEFAULTS, float(k))) <= 1e-12

    def test_rejects_nan(self) -> None:
        with pytest.raises(InvalidArgumentError):
            FDParams(t0=math.nan, U=0.0)


class TestCirculantEigs:
    """Tests for the two-route circulant spectrum."""

    def test_four_site_ring(self) -> None:
        """t0 = 1, U = 0 on 4 sites: {0, 2, 2, 4}."""
        np.testing.assert_allclose(fd_circulant_eigs(FDParams(1.0, 0.0), 4), [0, 2, 2, 4], atol=1e-12)

    def test_matches_closed_form(self) -> None:
        """Ring eigenvalues are (2 t0 + U) - 2 t0 cos(2 pi n / N)."""
        fd = FDParams(t0=0.7, U=-0.2)
        N = 9
        expected = sorted(fd_dispersion(fd, 2 * math.pi * n / N) for n in range(N))
        np.testing.assert_allclose(fd_circulant_eigs(fd, N), expected, atol=1e-12)

    def test_random_draws(self) -> None:
        """Jacobi and DFT routes agree for random parameters and ring sizes."""
        rng = np.random.default_rng(17)
        for _ in range(100):
            fd = FDParams(t0=float(rng.uniform(-2, 2)), U=float(rng.uniform(-2, 2)))
            N = int(rng.integers(3, 33))
            values = fd_circulant_eigs(fd, N)
            expected = sorted(fd_dispersion(fd, 2 * math.pi * n / N) for n in range(N))
            np.testing.assert_allclose(values, expected, rtol=0, atol=1e-10)
            assert values == sorted(values)

    @pytest.mark.parametrize("N", [0, 1, 2])
    def test_small_ring_rejected(self, N: int) -> None:
        with pytest.raises(InvalidArgumentError):
            fd_circulant_eigs(FDParams(1.0, 0.0), N)


class TestFDBandStructure:
    """Tests for the folded finite-difference bands."""

    @pytest.mark.parametrize("M", [1, 2, 3, 4])
    def test_equals_analytic_branches(self, M: int) -> None:
        grid = make_kgrid(0, math.pi, 32)
        fd = fd_band_structure(fd_params_from_lattice(DEFAULTS), M, grid)
        lti = lti_band_structure(DEFAULTS, M, grid)
        assert fd.engine is Engine.FD
        assert fd.labels == lti.labels
        np.testing.assert_allclose(fd.energies, lti.energies, atol=1e-12)

    def test_sweep_reports_caller_params(self) -> None:
        """fd_sweep keeps the input parameters rather than rebuilding alpha from t0 and U."""
        bands = fd_sweep(DEFAULTS, 2, make_kgrid(0, math.pi, 8))
        assert bands.params == DEFAULTS
        assert bands.params.alpha == -0.17


class TestRegistry:
    """Tests for the engine registry."""

    def test_all_engines_registered(self) -> None:
        assert {"lti", "tb", "fd"} <= set(list_engines())

    def test_unknown_engine(self) -> None:
        assert get_engine("nope") is None

    @pytest.mark.parametrize("name", ["lti", "tb", "fd"])
    def test_dispatch(self, name: str) -> None:
        sweep = get_engine(name)
        assert sweep is not None
        bands = sweep(DEFAULTS, 2, make_kgrid(0, 1, 4))
        assert bands.engine.value == name
        assert bands.cell_size == 2
