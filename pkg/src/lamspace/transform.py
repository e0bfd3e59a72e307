"""The weighted-mean transform, its inverse, the S-operator and the series norms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._numerics import compensated_cumsum, loglog_slope, running_max
from .sequences import LazySequence, PartialSumSeries
from .weights import LambdaWeights

__all__ = [
    "lambda_matrix_entry",
    "lambda_matrix_block",
    "lambda_transform",
    "inverse_lambda_transform",
    "s_operator",
    "NormReport",
    "series_norm",
    "bs_lambda_norm",
    "classify_trend",
    "TREND_SLOPE",
    "STABLE_REL",
]

# log-log slope of the running max separating growth from boundedness
TREND_SLOPE = 0.1
# relative increase of the running max over the last half window that still counts as stabilized
STABLE_REL = 1e-2


def lambda_matrix_entry(lam: LambdaWeights, n: int, k: int) -> float:
    """Entry ``(n, k)`` of the weighted-mean matrix: ``gap(k)/value(n)`` for ``k <= n``."""
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    if k > n:
        return 0.0
    return float(lam.gaps(n + 1)[k] / lam.values(n + 1)[n])


def lambda_matrix_block(lam: LambdaWeights, rows: int, cols: int | None = None) -> np.ndarray:
    """Dense upper-left ``rows x cols`` block of the weighted-mean matrix."""
    cols = rows if cols is None else cols
    size = max(rows, cols)
    g = lam.gaps(size)[:cols]
    v = lam.values(size)[:rows]
    out = g[None, :] / v[:, None]
    return np.tril(out)


def lambda_transform(lam: LambdaWeights, x: LazySequence) -> LazySequence:
    """``Lambda_n(x) = (1/value(n)) * sum_{k<=n} gap(k) x_k`` as a lazy sequence."""

    def block(m):
        return compensated_cumsum(lam.gaps(m) * x.take(m)) / lam.values(m)

    return LazySequence(block=block, label=f"Lambda[{lam.describe()}]({x.label})",
                        dtype=np.result_type(x.dtype, float))


def inverse_lambda_transform(lam: LambdaWeights, y: LazySequence) -> LazySequence:
    """Recover ``x`` from ``y = Lambda(x)``.

    ``x_k = (value(k) y_k - value(k-1) y_{k-1}) / gap(k)``, evaluated as
    ``y_k + value(k-1) (y_k - y_{k-1}) / gap(k)`` to avoid cancelling two large
    products.  Raises :class:`~lamspace.errors.GapTooSmall` on evaluation when
    a probed gap is under the floor.
    """

    def block(m):
        lam.check_gaps(m)
        g = lam.gaps(m)
        v_prev = np.concatenate(([0.0], lam.values(m)[:-1]))
        yy = y.take(m)
        y_prev = np.concatenate(([0.0], yy[:-1])).astype(yy.dtype)
        return yy + v_prev * (yy - y_prev) / g

    return LazySequence(block=block, label=f"Lambda^-1[{lam.describe()}]({y.label})",
                        dtype=np.result_type(y.dtype, float))


def s_operator(lam: LambdaWeights, x: LazySequence) -> LazySequence:
    """``S_0 = 0``, ``S_n = (1/value(n)) sum_{k=1}^{n} value(k-1) (x_k - x_{k-1})``.

    Equal to ``x_n - Lambda_n(x)`` in exact arithmetic.
    """

    def block(m):
        xx = x.take(m)
        v = lam.values(m)
        terms = np.zeros(m, dtype=xx.dtype)
        terms[1:] = v[:-1] * (xx[1:] - xx[:-1])
        return compensated_cumsum(terms) / v

    return LazySequence(block=block, label=f"S[{lam.describe()}]({x.label})",
                        dtype=np.result_type(x.dtype, float))


@dataclass(frozen=True)
class NormReport:
    """Truncated series norm with a growth classification of the running max."""

    value: float
    trend: str  # bounded-looking | growing | inconclusive
    slope: float
    depth: int
    argmax: int

    def to_dict(self) -> dict:
        return {"value": self.value, "trend": self.trend, "slope": self.slope,
                "depth": self.depth, "argmax": self.argmax}


def classify_trend(running: np.ndarray, tol: float = 0.0) -> tuple[str, float]:
    """Classify a running maximum as bounded-looking, growing or inconclusive.

    Fits log(running) against log(index) over the last half of the window.
    A slope above 0.1 is growth.  A slope within +-0.1 counts as bounded only
    when the maximum also moved by less than 1% over that half.
    """
    n = len(running)
    if n == 0:
        return "inconclusive", float("nan")
    top = float(running[-1])
    if top <= tol:
        return "bounded-looking", 0.0
    half = n // 2
    if n - half < 2:
        return "inconclusive", float("nan")
    idx = np.arange(half, n) + 1.0
    slope = loglog_slope(idx, running[half:])
    if np.isnan(slope):
        return "inconclusive", slope
    if slope > TREND_SLOPE:
        return "growing", slope
    moved = top - float(running[half])
    if abs(slope) <= TREND_SLOPE and moved <= STABLE_REL * top + tol:
        return "bounded-looking", slope
    return "inconclusive", slope


def series_norm(y: LazySequence, depth: int, tol: float = 0.0) -> NormReport:
    """``max_{m <= depth} |y_0 + ... + y_m|``: the truncated cs/bs norm."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    sums = PartialSumSeries(y).take(depth + 1)
    run = running_max(sums)
    trend, slope = classify_trend(run, tol)
    return NormReport(float(run[-1]), trend, slope, depth, int(np.argmax(np.abs(sums))))


def bs_lambda_norm(lam: LambdaWeights, x: LazySequence, depth: int, tol: float = 0.0) -> NormReport:
    """Truncated norm shared by the three lambda series spaces.

    ``value = max_{m <= depth} |sum_{n<=m} Lambda_n(x)|``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    return series_norm(lambda_transform(lam, x), depth, tol)
