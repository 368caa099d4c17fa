"""Entry point for python -m ltiband."""

from .cli.app import app

if __name__ == "__main__":
    app()
