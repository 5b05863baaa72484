"""Feasibility classification and leader election for anonymous radio networks."""

from ._radiole import *  # noqa: F401,F403
from ._radiole import __version__  # noqa: F401
