"""
SVG band-structure plots written as plain markup.

Analytic (lti) and finite-difference (fd) bands are drawn as one polyline per
branch; diagonalization (tb) samples are drawn as dots, so an engine=all plot
shows the dots sitting on the lines. Output holds no timestamps and is
byte-stable for identical input.
"""

import math
from fractions import Fraction

import numpy as np

from ..exceptions import InvalidArgumentError
from ..lattice import BandStructure, Engine

WIDTH = 800
HEIGHT = 520
MARGIN_LEFT = 80
MARGIN_RIGHT = 150
MARGIN_TOP = 50
MARGIN_BOTTOM = 60

COLORS = [
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
]
TB_COLOR = "#d62728"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
        .replace("'", "&#39;")
    )


def pi_label(quarters: int) -> str:
    """Label for quarters * pi/4, e.g. 2 -> 'π/2', -3 -> '−3π/4'."""
    if quarters == 0:
        return "0"
    frac = Fraction(quarters, 4)
    sign = "−" if frac < 0 else ""
    num, den = abs(frac.numerator), frac.denominator
    head = "π" if num == 1 else f"{num}π"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


def pi_ticks(k_min: float, k_max: float) -> list[tuple[float, str]]:
    """Multiples of pi/4 inside [k_min, k_max]."""
    step = math.pi / 4
    first = math.ceil(k_min / step - 1e-9)
    last = math.floor(k_max / step + 1e-9)
    return [(q * step, pi_label(q)) for q in range(first, last + 1)]


def render_band_svg(structures: list[BandStructure], title: str | None = None) -> str:
    if not structures:
        raise InvalidArgumentError("nothing to plot")
    first = structures[0]
    grid = first.kgrid
    params = first.params

    plot_left = MARGIN_LEFT
    plot_right = WIDTH - MARGIN_RIGHT
    plot_top = MARGIN_TOP
    plot_bottom = HEIGHT - MARGIN_BOTTOM

    lo, hi = params.band_bounds
    pad = 0.05 * (hi - lo) if hi > lo else 0.1
    y_min, y_max = lo - pad, hi + pad

    def x_px(k: float) -> float:
        return plot_left + (k - grid.k_min) / (grid.k_max - grid.k_min) * (plot_right - plot_left)

    def y_px(e: float) -> float:
        return plot_bottom - (e - y_min) / (y_max - y_min) * (plot_bottom - plot_top)

    if title is None:
        engines = "+".join(s.engine.value for s in structures)
        title = f"Band structure, M = {first.cell_size} ({engines})"

    lines: list[str] = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    lines.append('<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>')
    lines.append(
        f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-size="18" '
        f'font-family="sans-serif">{_escape(title)}</text>'
    )

    # Axes frame
    lines.append(
        f'<rect x="{plot_left}" y="{plot_top}" width="{plot_right - plot_left}" '
        f'height="{plot_bottom - plot_top}" fill="none" stroke="#000000" stroke-width="1"/>'
    )

    for k, label in pi_ticks(grid.k_min, grid.k_max):
        x = x_px(k)
        lines.append(
            f'<line x1="{x:.2f}" y1="{plot_top}" x2="{x:.2f}" y2="{plot_bottom}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{x:.2f}" y="{plot_bottom + 20}" text-anchor="middle" font-size="13" '
            f'font-family="sans-serif">{_escape(label)}</text>'
        )

    for e in np.linspace(lo, hi, 5):
        y = y_px(float(e))
        lines.append(
            f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" '
            'stroke="#eeeeee" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{plot_left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="12" '
            f'font-family="sans-serif">{float(e):.2f}</text>'
        )

    lines.append(
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" '
        'font-size="14" font-family="sans-serif">k (1/a)</text>'
    )
    lines.append(
        f'<text x="20" y="{(plot_top + plot_bottom) / 2:.1f}" text-anchor="middle" font-size="14" '
        f'font-family="sans-serif" transform="rotate(-90 20 {(plot_top + plot_bottom) / 2:.1f})">'
        "E (eV)</text>"
    )

    legend: list[tuple[str, str, bool]] = []
    for bands in structures:
        ks = bands.kgrid.points
        if bands.engine is Engine.TB:
            for k, row in zip(ks, bands.energies, strict=True):
                for e in row:
                    lines.append(
                        f'<circle cx="{x_px(float(k)):.2f}" cy="{y_px(float(e)):.2f}" r="2" '
                        f'fill="{TB_COLOR}"/>'
                    )
            legend.append(("tb (diagonalization)", TB_COLOR, True))
            continue

        dash = ' stroke-dasharray="6 4"' if bands.engine is Engine.FD else ""
        for n, label in enumerate(bands.labels):
            color = COLORS[n % len(COLORS)]
            points = " ".join(
                f"{x_px(float(k)):.2f},{y_px(float(e)):.2f}"
                for k, e in zip(ks, bands.band(n), strict=True)
            )
            lines.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="2"{dash} points="{points}"/>'
            )
            legend.append((f"{bands.engine.value} i={label}", color, False))

    for n, (label, color, dot) in enumerate(legend):
        y = plot_top + 10 + n * 20
        x = plot_right + 15
        if dot:
            lines.append(f'<circle cx="{x + 10}" cy="{y}" r="3" fill="{color}"/>')
        else:
            lines.append(
                f'<line x1="{x}" y1="{y}" x2="{x + 20}" y2="{y}" stroke="{color}" stroke-width="2"/>'
            )
        lines.append(
            f'<text x="{x + 28}" y="{y + 4}" font-size="12" font-family="sans-serif">'
            f"{_escape(label)}</text>"
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
