"""Exception hierarchy shared by every flatbeltrami module."""

from __future__ import annotations


class FlatBeltramiError(Exception):
    """Base class for errors raised by this package."""


class DomainError(FlatBeltramiError, ValueError):
    """Raised when an operation is called outside its precondition."""


class ConfigurationError(FlatBeltramiError, ValueError):
    """Raised when a step geometry or suite configuration is invalid."""


class SettingsError(FlatBeltramiError, RuntimeError):
    """Raised when the JSON defaults cannot be loaded."""


__all__ = ["FlatBeltramiError", "DomainError", "ConfigurationError", "SettingsError"]
