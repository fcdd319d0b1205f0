"""Bell inequalities from finite-group orbits.

Thin python layer over the C++ core: group construction, unitary
representations, orbit-generated Bell scenarios, classical/quantum bounds,
nonlocal games, and seed search.
"""

from groupbell._core import *  # noqa: F401,F403
from groupbell._core import __version__  # noqa: F401
