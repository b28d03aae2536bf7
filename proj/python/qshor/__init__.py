"""Reversible-circuit synthesis and exact simulation for Shor's algorithm."""

from qshor._core import *  # noqa: F401,F403
from qshor._core import __doc__  # noqa: F401
