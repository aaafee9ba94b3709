"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Set ``GALLAIKIT_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _kernels_py

if os.environ.get("GALLAIKIT_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"


def jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int, impl=None) -> int:
    return (impl or _impl).jacobi_sweeps(a, tol, max_sweeps)


def cycle_exists(adj: np.ndarray, length: int, start: int, first: int = -1,
                 required=(), required_edges=(), impl=None) -> bool:
    """See ``_kernels.cycle_exists``; ``required_edges`` is a list of pairs."""
    req_e = np.ascontiguousarray(required_edges, dtype=np.int64).reshape(-1)
    # edge endpoints count as required vertices so the length pruning sees them
    req = np.unique(np.concatenate([np.asarray(required, dtype=np.int64).reshape(-1), req_e]))
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    return bool((impl or _impl).cycle_exists(adj, length, start, first, req, req_e))


def implementations() -> dict:
    """All importable backends by name (for benchmarks and parity tests)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
