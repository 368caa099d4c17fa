"""Unit tests for SVG band plots."""

import math

import pytest

from ltiband.cli.svg import pi_label, pi_ticks, render_band_svg
from ltiband.engines import band_sweep, fd_sweep, lti_band_structure
from ltiband.exceptions import InvalidArgumentError
from ltiband.lattice import default_params, make_kgrid

DEFAULTS = default_params()
GRID = make_kgrid(0, math.pi, 12)


class TestTicks:
    """Tests for pi/4 tick labels."""

    @pytest.mark.parametrize(
        ("quarters", "label"),
        [(0, "0"), (1, "π/4"), (2, "π/2"), (3, "3π/4"), (4, "π"), (8, "2π"), (-3, "−3π/4"), (-4, "−π")],
    )
    def test_pi_label(self, quarters: int, label: str) -> None:
        assert pi_label(quarters) == label

    def test_zero_to_pi(self) -> None:
        assert [label for _, label in pi_ticks(0, math.pi)] == ["0", "π/4", "π/2", "3π/4", "π"]

    def test_symmetric_range(self) -> None:
        ticks = pi_ticks(-math.pi / 2, math.pi / 2)
        assert [label for _, label in ticks] == ["−π/2", "−π/4", "0", "π/4", "π/2"]


class TestRenderBandSvg:
    """Tests for render_band_svg."""

    def test_document_frame(self) -> None:
        svg = render_band_svg([lti_band_structure(DEFAULTS, 1, GRID)])
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
        assert svg.endswith("</svg>\n")

    def test_one_polyline_per_branch(self) -> None:
        svg = render_band_svg([lti_band_structure(DEFAULTS, 3, GRID)])
        assert svg.count("<polyline") == 3
        assert "<circle" not in svg

    def test_all_engines(self) -> None:
        """lti and fd draw lines; tb draws one dot per eigenvalue plus a legend dot."""
        structures = [f(DEFAULTS, 2, GRID) for f in (lti_band_structure, band_sweep, fd_sweep)]
        svg = render_band_svg(structures)
        assert svg.count("<polyline") == 4
        assert svg.count("<circle") == GRID.count * 2 + 1
        assert svg.count('stroke-dasharray="6 4"') == 2

    def test_title_escaped(self) -> None:
        svg = render_band_svg([lti_band_structure(DEFAULTS, 1, GRID)], title="E<k> & more")
        assert "E&lt;k&gt; &amp; more" in svg

    def test_deterministic(self) -> None:
        bands = [lti_band_structure(DEFAULTS, 4, GRID)]
        assert render_band_svg(bands) == render_band_svg(bands)

    def test_nothing_to_plot(self) -> None:
        with pytest.raises(InvalidArgumentError):
            render_band_svg([])
