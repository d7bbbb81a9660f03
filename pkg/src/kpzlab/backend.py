"""Kernel backend selection.

Hot inner loops (event application, column sweeps) are compiled with numba
when it is importable.  Setting ``KPZLAB_BACKEND=numpy`` forces the pure
NumPy/Python fallback; ``KPZLAB_BACKEND=numba`` fails loudly if numba is
missing.  Both paths consume the same counter-addressed random draws, so
results are bit-identical across backends.
"""

from __future__ import annotations

import os

_requested = os.environ.get("KPZLAB_BACKEND", "auto").lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(f"KPZLAB_BACKEND must be auto|numba|numpy, got {_requested!r}")

if _requested == "numpy":
    _numba = None
else:
    try:
        import numba as _numba
    except ImportError:
        if _requested == "numba":
            raise
        _numba = None

USING_NUMBA = _numba is not None
BACKEND = "numba" if USING_NUMBA else "numpy"


def njit(*args, **kwargs):
    """``numba.njit`` when active, identity decorator otherwise."""
    if USING_NUMBA:
        kwargs.setdefault("cache", True)
        if "inline" not in kwargs:
            kwargs.setdefault("nogil", True)
        return _numba.njit(*args, **kwargs)
    if args and callable(args[0]) and len(args) == 1 and not kwargs:
        return args[0]

    def wrap(f):
        return f

    return wrap
