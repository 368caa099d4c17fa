"""
Engine registry for band-structure dispatch.
"""

from collections.abc import Callable

from ..lattice import BandStructure, KGrid, LatticeParams

SweepFunc = Callable[[LatticeParams, int, KGrid], BandStructure]

_engines: dict[str, SweepFunc] = {}


def register(name: str) -> Callable[[SweepFunc], SweepFunc]:
    """Decorator to register a band-structure engine."""

    def decorator(func: SweepFunc) -> SweepFunc:
        _engines[name] = func
        return func

    return decorator


def get_engine(name: str) -> SweepFunc | None:
    """Get the sweep function for an engine name."""
    return _engines.get(name)


def list_engines() -> list[str]:
    """List all registered engine names."""
    return list(_engines.keys())
