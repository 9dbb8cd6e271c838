"""Flat solutions of a 2×2 Beltrami system: construction, jets and numerical verification."""

__version__ = "0.1.0"

from .main import main  # noqa: E402

__all__ = ["main", "__version__"]
