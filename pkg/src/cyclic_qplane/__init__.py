"""cyclic-qplane - exact algebra on the cyclic quantum plane at a root of unity."""

__version__ = "0.1.0"

from .cli import app


def main() -> None:
    """Entry point for the command line."""
    app()


__all__ = ["app", "main", "__version__"]
