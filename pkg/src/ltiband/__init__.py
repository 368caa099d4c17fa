"""
ltiband - band structures of a 1D atomic chain.

Computes folded supercell bands two ways: analytically, by treating the cell as
a spike train convolved with the nearest-neighbor impulse response, and by
diagonalizing the Bloch Hamiltonian at every k-point. A verification layer
checks the two against each other and a benchmark times them.
"""

__version__ = "0.1.0"


def main() -> None:
    """Main entry point for ltiband CLI."""
    from .cli.app import app

    app()
