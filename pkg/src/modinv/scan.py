"""Float64 prefilter over the integer pivot box.

The scan walks every integer tuple ``z`` with ``lo <= z <= hi`` and keeps those
for which each reconstructed entry ``sum_t z[t] * K[t, e]`` is within ``tol``
of an integer in ``[0, bound[e] * scale]`` (``scale = z[0]`` when
``scale_first``, else 1).  Entries are grouped by depth: the entries in
``level_end[t-1]:level_end[t]`` depend only on ``z[:t+1]`` and are checked as
soon as that prefix is fixed.

The compiled extension is used when it was built; set ``MODINV_PURE_PYTHON=1``
to force the Python path.  Survivors are only candidates: callers confirm them
at full precision.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["scan_box", "scan_box_python", "BACKEND", "available_backends"]


def scan_box_python(K, lo, hi, bound, level_end, scale_first, tol):
    K = np.ascontiguousarray(K, dtype=np.float64)
    m, E = K.shape
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    lo = [int(x) for x in lo]
    hi = [int(x) for x in hi]
    level_end = [int(x) for x in level_end]
    bound = np.asarray(bound, dtype=np.float64)
    partial = np.zeros((m + 1, E))
    z = [0] * m
    found = []

    def descend(t: int) -> None:
        start = 0 if t == 0 else level_end[t - 1]
        stop = level_end[t]
        row = K[t, start:]
        base = partial[t, start:]
        for value in range(lo[t], hi[t] + 1):
            z[t] = value
            cur = base + value * row
            scale = z[0] if scale_first else 1.0
            v = cur[: stop - start]
            if v.size and (
                np.abs(v - np.floor(v + 0.5)).max() > tol
                or v.min() < -tol
                or (v - bound[start:stop] * scale).max() > tol
            ):
                continue
            partial[t + 1, start:] = cur
            if t == m - 1:
                found.append(tuple(z))
            else:
                descend(t + 1)

    descend(0)
    if not found:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(found, dtype=np.int64)


try:
    from ._scan import scan_box as _scan_box_ext
except ImportError:  # extension not built
    _scan_box_ext = None

BACKEND = "cython" if _scan_box_ext is not None and not os.environ.get("MODINV_PURE_PYTHON") else "python"


def available_backends() -> list[str]:
    return (["cython"] if _scan_box_ext is not None else []) + ["python"]


def scan_box(K, lo, hi, bound, level_end, scale_first, tol=1e-6, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython":
        if _scan_box_ext is None:
            raise RuntimeError("compiled scan extension is not available")
        return _scan_box_ext(
            np.ascontiguousarray(K, dtype=np.float64),
            np.ascontiguousarray(lo, dtype=np.int64),
            np.ascontiguousarray(hi, dtype=np.int64),
            np.ascontiguousarray(bound, dtype=np.float64),
            np.ascontiguousarray(level_end, dtype=np.int64),
            bool(scale_first),
            float(tol),
        )
    if backend != "python":
        raise ValueError(f"unknown scan backend {backend!r}")
    return scan_box_python(K, lo, hi, bound, level_end, scale_first, tol)
