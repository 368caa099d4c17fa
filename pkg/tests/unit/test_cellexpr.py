"""Unit tests for the spike-train expression language."""

import pytest

from ltiband.cellexpr import format_cell, parse_cell
from ltiband.exceptions import CellExpressionError, ConfigError
from ltiband.lattice import spike_train


class TestParseCell:
    """Tests for parse_cell."""

    def test_three_site_cell(self) -> None:
        """δ[x + a] + δ[x] + δ[x − a] sits at -1, 0, 1."""
        cell = parse_cell("δ[x + a] + δ[x] + δ[x − a]")
        assert cell.positions == (-1, 0, 1)
        assert cell.weights == (1.0, 1.0, 1.0)

    def test_ascii_spelling(self) -> None:
        """'d' and 'delta' spell δ; '-' works as well as '−'."""
        assert parse_cell("d[x] + delta[x - a]").positions == (0, 1)

    def test_integer_multiple(self) -> None:
        """δ[x - 2a] is a spike at +2."""
        assert parse_cell("δ[x - 2a]").positions == (2,)

    def test_bare_integer_offsets(self) -> None:
        assert parse_cell("d[x+1] + d[x-1]").positions == (-1, 1)

    def test_weights(self) -> None:
        """Weights may be written with or without '*'."""
        cell = parse_cell("0.5*d[x] + 2 d[x+a]")
        assert cell.positions == (-1, 0)
        assert cell.weights == (2.0, 0.5)

    def test_signs(self) -> None:
        cell = parse_cell("-d[x] - 3*d[x - a]")
        assert cell.weights == (-1.0, -3.0)

    def test_repeated_positions_merge(self) -> None:
        """Repeated spikes add their weights."""
        cell = parse_cell("d[x] + d[x] + 0.5 d[x]")
        assert cell.positions == (0,)
        assert cell.weights == (2.5,)

    def test_whitespace_ignored(self) -> None:
        assert parse_cell("  δ [ x  +  a ]   ") == parse_cell("δ[x+a]")

    def test_non_integer_offset(self) -> None:
        """Offsets must be whole multiples of a."""
        with pytest.raises(CellExpressionError, match="integer"):
            parse_cell("d[x + 1.5a]")

    @pytest.mark.parametrize("text", ["", "x", "d[y]", "d[x] +", "d[x + b]"])
    def test_syntax_errors(self, text: str) -> None:
        with pytest.raises(CellExpressionError):
            parse_cell(text)

    def test_error_is_config_error(self) -> None:
        """Parse failures surface as configuration errors (exit code 1)."""
        with pytest.raises(ConfigError):
            parse_cell("δ")


class TestFormatCell:
    """Tests for format_cell."""

    def test_canonical_spelling(self) -> None:
        assert format_cell(parse_cell("d[x+1]+d[x]+d[x-1]")) == "δ[x + a] + δ[x] + δ[x - a]"

    def test_weighted_cell(self) -> None:
        train = spike_train([-1, 0, 2], [1.0, -0.5, 2.0])
        assert format_cell(train) == "δ[x + a] - 0.5*δ[x] + 2*δ[x - 2a]"

    def test_parse_inverts_format(self) -> None:
        """parse_cell(format_cell(t)) reproduces t exactly."""
        train = spike_train([-3, -1, 0, 4], [0.25, -1.0, 3.0, -7.5])
        assert parse_cell(format_cell(train)) == train

    def test_leading_negative(self) -> None:
        assert format_cell(spike_train([1], [-1.0])) == "-δ[x - a]"
