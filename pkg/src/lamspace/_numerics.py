"""Small numerical helpers shared across modules."""

from __future__ import annotations

import numpy as np


def compensated_cumsum(values) -> np.ndarray:
    """Running sums with Neumaier compensation.

    The result is prefix-stable: entry ``i`` depends only on ``values[:i+1]``.
    """
    arr = np.asarray(values)
    if np.iscomplexobj(arr):
        return compensated_cumsum(arr.real) + 1j * compensated_cumsum(arr.imag)
    out = np.empty(arr.shape[0], dtype=float)
    s = 0.0
    c = 0.0
    for i, v in enumerate(arr.tolist()):
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        out[i] = s + c
    return out


def running_max(values) -> np.ndarray:
    return np.maximum.accumulate(np.abs(np.asarray(values)))


def loglog_slope(index: np.ndarray, values: np.ndarray) -> float:
    """Least-squares slope of log(values) against log(index).

    Non-positive values are dropped; returns nan if fewer than two points remain.
    """
    index = np.asarray(index, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = (index > 0) & (values > 0) & np.isfinite(values)
    if keep.sum() < 2:
        return float("nan")
    lx = np.log(index[keep])
    ly = np.log(values[keep])
    if np.ptp(lx) == 0:
        return float("nan")
    return float(np.polyfit(lx, ly, 1)[0])


def dyadic_windows(length: int, count: int = 4) -> list[tuple[int, int]]:
    """Closed index windows [D/2, D], [D/4, D/2], ... ending at D = length - 1.

    Windows share endpoints so their oscillations bound the total drift.
    """
    end = length - 1
    windows = []
    for _ in range(count):
        start = end // 2
        if end - start < 1:
            break
        windows.append((start, end))
        end = start
    return windows
