"""Generation decomposition, propagation indices and cycle census for networks."""

from ._stocnet import *  # noqa: F401,F403
from ._stocnet import StocnetError

__all__ = [name for name in dir() if not name.startswith("_")]
