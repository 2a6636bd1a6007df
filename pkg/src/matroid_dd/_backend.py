"""Kernel backend selection.

The hot table kernels in :mod:`matroid_dd.kernels` exist twice: a numba
``@njit`` loop version and a pure-numpy vectorized version.  Which one runs
is decided by the ``MATROID_DD_BACKEND`` environment variable (``numba``,
``numpy`` or ``auto``) when the package is imported, and can be switched
later with :func:`set_backend`.
"""

import os
import warnings

BACKEND_ENV = "MATROID_DD_BACKEND"
BACKENDS = ("numba", "numpy")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    numba = None
    HAVE_NUMBA = False


def _resolve(name):
    name = (name or "auto").strip().lower()
    if name == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; expected one of {BACKENDS} or 'auto'")
    if name == "numba" and not HAVE_NUMBA:
        warnings.warn("numba is not installed; falling back to the numpy kernels", RuntimeWarning)
        return "numpy"
    return name


_current = _resolve(os.environ.get(BACKEND_ENV))


def get_backend():
    return _current


def set_backend(name):
    """Select the kernel backend; returns the previous one."""
    global _current
    previous = _current
    _current = _resolve(name)
    return previous


def njit(fn):
    if HAVE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn
