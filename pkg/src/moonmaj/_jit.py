"""Optional numba compilation for the array kernels.

Every kernel in the package is written against plain int64 numpy arrays so it
runs unchanged under the interpreter; set ``MOONMAJ_NO_JIT=1`` to force that.
"""
from __future__ import annotations

import os

try:
    if os.environ.get("MOONMAJ_NO_JIT"):
        raise ImportError
    from numba import njit as _njit
except ImportError:  # pragma: no cover
    _njit = None


def njit(fn=None, **kwargs):
    if _njit is None:
        return fn if fn is not None else (lambda f: f)
    kwargs.setdefault("cache", True)
    if fn is None:
        return _njit(**kwargs)
    return _njit(**kwargs)(fn)
