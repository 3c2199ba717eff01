"""Exact rational arithmetic for the adjacency geometry of symmetric matrices.

The compiled extension carries the whole API; this package re-exports it.
"""

from ._symadj import *  # noqa: F401,F403
