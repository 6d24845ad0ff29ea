"""Enumerative invariants of non-special scrolls with general moduli."""

from ._backend import BACKEND
from .errors import (
    ConsistencyWarning,
    DomainError,
    InfeasibleError,
    InvariantError,
    ParameterError,
    ResourceError,
    ScrollError,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConsistencyWarning",
    "DomainError",
    "InfeasibleError",
    "InvariantError",
    "ParameterError",
    "ResourceError",
    "ScrollError",
]
