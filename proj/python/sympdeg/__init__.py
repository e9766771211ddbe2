"""Degenerations of type-A quiver representations and symplectic PBW combinatorics."""

from ._core import *  # noqa: F401,F403
from ._core import SympdegError, __version__  # noqa: F401
