"""Geometric phases of two-level systems and their gyrator-circuit analogs."""

from ._geophase import *  # noqa: F401,F403
from ._geophase import DomainError, __doc__  # noqa: F401
