"""Select the compiled kernels when built, else the pure-Python fallback.

Set ``LIECHECK_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

_LIMIT = 1 << 40

if os.environ.get("LIECHECK_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _small(labels, cartan):
    # orbit/dominance growth is bounded by a few multiples of the input labels
    bound = max((abs(x) for x in labels), default=0) * 64 + 1
    cmax = max((abs(x) for row in cartan for x in row), default=0) + 1
    return bound * cmax < _LIMIT


def to_dominant(labels, cartan):
    if _compiled is not None and _small(labels, cartan):
        return _compiled.to_dominant(labels, cartan)
    return _kernels_py.to_dominant(labels, cartan)


def orbit(labels, cartan, cap):
    if _compiled is not None and _small(labels, cartan):
        return _compiled.orbit(labels, cartan, cap)
    return _kernels_py.orbit(labels, cartan, cap)


def additive_closure(vectors, seed):
    if _compiled is not None:
        return _compiled.additive_closure(vectors, seed)
    return _kernels_py.additive_closure(vectors, seed)
