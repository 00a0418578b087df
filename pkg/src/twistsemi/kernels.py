"""Kernel backend selection.

The compiled extension is used when importable; set ``TWISTSEMI_PURE_PYTHON=1``
to force the numpy/pure-Python fallback.
"""
import os

import numpy as np

from . import _pykernels

if os.environ.get("TWISTSEMI_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND


def backends():
    """All importable backends, keyed by name (used by tests and benchmarks)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


def _i32(a):
    return np.ascontiguousarray(a, dtype=np.int32)


def assoc_violation(t):
    return _impl.assoc_violation(_i32(t))


def commut_violation(t):
    return _impl.commut_violation(_i32(t))


def distrib_violation(add, mul):
    return _impl.distrib_violation(_i32(add), _i32(mul))


def hom_violation(src, tgt, f):
    return _impl.hom_violation(_i32(src), _i32(tgt), _i32(f))


def prepare(ops):
    return _impl.prepare(_i32(ops))


def close_map(src, tgt, fmap, order, processed, count, used=None):
    return _impl.close_map(src, tgt, fmap, order, processed, count, used)
