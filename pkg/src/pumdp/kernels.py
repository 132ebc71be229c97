"""Backend selection for the elimination kernels.

The compiled ``_ckernels`` module is used when it imports; otherwise, or when
``PUMDP_PURE_PYTHON=1`` is set, the pure-Python twin is used.  Both expose
``det``, ``rank``, ``scan_minors`` and ``minor_dets`` with identical semantics.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .gf import KernelField

if os.environ.get("PUMDP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"


def _idx(sets) -> np.ndarray:
    arr = np.ascontiguousarray(sets, dtype=np.intc)
    if arr.ndim != 2:
        arr = arr.reshape(len(arr), -1)
    return arr


def det(a: np.ndarray, tables: KernelField, impl=None) -> np.ndarray:
    impl = impl or _impl
    return impl.det(np.ascontiguousarray(a, dtype=np.intc), *tables)


def rank(a: np.ndarray, tables: KernelField, impl=None) -> int:
    impl = impl or _impl
    return int(impl.rank(np.ascontiguousarray(a, dtype=np.intc), *tables))


def scan_minors(a, rowsets, colsets, tables: KernelField, full_scan=False, impl=None) -> tuple[int, int, int]:
    impl = impl or _impl
    first, zeros, checked = impl.scan_minors(
        np.ascontiguousarray(a, dtype=np.intc), _idx(rowsets), _idx(colsets), bool(full_scan), *tables
    )
    return int(first), int(zeros), int(checked)


def minor_dets(a, rowsets, colsets, tables: KernelField, impl=None) -> np.ndarray:
    impl = impl or _impl
    return impl.minor_dets(np.ascontiguousarray(a, dtype=np.intc), _idx(rowsets), _idx(colsets), *tables)


def implementations() -> dict:
    """Every importable backend by name (for benchmarks and cross-checks)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
