"""CLI for ltiband."""

from .app import app
from .output import ArtifactWriter, print_error, print_info, print_success
from .serialize import read_band_csv, read_band_json, write_band_csv, write_band_json
from .svg import render_band_svg

__all__ = [
    "app",
    "ArtifactWriter",
    "print_error",
    "print_success",
    "print_info",
    "read_band_csv",
    "read_band_json",
    "write_band_csv",
    "write_band_json",
    "render_band_svg",
]
