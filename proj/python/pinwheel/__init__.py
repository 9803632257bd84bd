"""Finite pinwheel scheduling variants.

Verifiers, reductions, exact and randomized solvers, and density
experiments, backed by the C++ core in the `_pinwheel` extension.
"""

from ._pinwheel import *  # noqa: F401,F403
from ._pinwheel import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
