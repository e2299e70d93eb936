"""Kernel backend selection.

Imports the compiled Cython kernels when they are built; otherwise falls
back to the pure-Python reference implementations.  Set ``ELLGT_PURE=1``
to force the fallback (used by the benchmark and the test matrix).
"""
import os

from . import _ref

if os.environ.get("ELLGT_PURE") == "1":
    _impl = _ref
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _ref

BACKEND = _impl.BACKEND
qp1 = _impl.qp1
qp2 = _impl.qp2
build_t_matrix = _impl.build_t_matrix

__all__ = ["BACKEND", "qp1", "qp2", "build_t_matrix", "_ref"]
