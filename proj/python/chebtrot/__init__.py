"""Chebyshev extrapolation of Trotterized dynamics."""

from ._chebtrot import *  # noqa: F401,F403
from ._chebtrot import (
    BranchError,
    CapabilityError,
    CrossingError,
    DomainError,
    InputError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
