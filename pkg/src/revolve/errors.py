"""Shared exception base for the revolve package."""


class RevolveError(Exception):
    """Base class for every error raised by this package."""
