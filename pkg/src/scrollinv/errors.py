"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class ScrollError(Exception):
    """Base class for every error raised by scrollinv."""

    exit_code = 1


class ParameterError(ScrollError, ValueError):
    """An argument is outside its type's domain (negative genus, rank 0, ...)."""

    exit_code = 2


class DomainError(ScrollError, ValueError):
    """Arguments are well formed but violate a mathematical hypothesis."""

    exit_code = 2


class InfeasibleError(DomainError):
    """A degeneration datum (conic count, W-degree, family dimension) is not realisable."""


class ResourceError(ScrollError):
    """A materialisation cap would be exceeded."""

    exit_code = 3


class InvariantError(ScrollError, AssertionError):
    """Two independent computations disagree. Never expected."""

    exit_code = 4


class ConsistencyWarning(UserWarning):
    """Inputs are accepted but contradict each other."""
