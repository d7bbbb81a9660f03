"""Monte Carlo and exact-enumeration toolkit for colored exclusion processes,
stochastic six-vertex models, and q-Boson line ensembles, with a statistical
verification harness for their KPZ-scale behavior.
"""

__version__ = "0.1.0"

from . import backend  # noqa: F401  (selects numba/numpy path at import)
