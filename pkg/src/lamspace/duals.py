"""Multiplier (alpha-, beta-, gamma-) duals of the lambda series spaces.

A sequence ``a`` belongs to the alpha/beta/gamma dual of a space ``X`` when
``(a_k x_k)`` is absolutely summable / summable / has bounded partial sums
for every ``x`` in ``X``.  For the lambda series spaces these duals reduce to
five conditions on ``a``:

``m1``/``m2``
    finite-subset suprema of the column differences of ``B`` (backward and
    forward differencing respectively), where ``a_n x_n = (B y)_n``;
``m3``
    ``sum_k |u_k - u_{k+1}| < inf`` with ``u_k = value(k) * dbar(a)_k``;
``m4``
    ``sup_k |value(k) a_k / gap(k)| < inf``;
``m5``
    ``lim_k |value(k) a_k / gap(k)|`` exists.
"""

from __future__ import annotations

import enum
import itertools

import numpy as np

from ._numerics import compensated_cumsum
from .errors import SubsetDepthTooLarge
from .matrix import TriangleMatrix
from .sequences import LazySequence
from .verdict import (
    DEFAULT_DEPTH,
    DEFAULT_TOL,
    Conclusion,
    Verdict,
    bounded_verdict,
    conjunction,
    limit_verdict,
)
from .weights import LambdaWeights

__all__ = [
    "delta_bar",
    "delta_bar_sequence",
    "b_lambda_matrix",
    "t_lambda_matrix",
    "DualSetId",
    "resolve_dual",
    "subset_supremum",
    "subset_power_supremum",
    "subset_depth_ladder",
    "subset_sup_verdict",
    "dual_membership",
    "MAX_SUBSET_DEPTH",
]

MAX_SUBSET_DEPTH = 14


def _normalized(lam: LambdaWeights, a: LazySequence, m: int) -> np.ndarray:
    lam.check_gaps(m)
    return a.take(m) / lam.gaps(m)


def delta_bar_sequence(lam: LambdaWeights, a: LazySequence) -> LazySequence:
    """``a_k/gap(k) - a_{k+1}/gap(k+1)`` as a lazy sequence."""

    def block(m):
        z = _normalized(lam, a, m + 1)
        return z[:-1] - z[1:]

    return LazySequence(block=block, label=f"dbar({a.label})", dtype=np.result_type(a.dtype, float))


def delta_bar(lam: LambdaWeights, a: LazySequence, k: int) -> float:
    """Forward difference of the gap-normalized sequence at ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    lam.check_gaps(k + 2)
    return a[k] / lam.gap(k) - a[k + 1] / lam.gap(k + 1)


def _weighted(lam: LambdaWeights, a: LazySequence, m: int) -> np.ndarray:
    """``value(k) a_k / gap(k)`` for ``k < m``."""
    return lam.values(m) * _normalized(lam, a, m)


def b_lambda_matrix(lam: LambdaWeights, a: LazySequence) -> TriangleMatrix:
    """Bidiagonal ``B`` with ``a_n x_n = (B y)_n`` whenever ``y = Lambda(x)``.

    ``b_nn = value(n) a_n / gap(n)``, ``b_{n,n-1} = -value(n-1) a_n / gap(n)``.
    """

    def block(r, c):
        size = max(r, c) + 1
        lam.check_gaps(size)
        v, g, aa = lam.values(size), lam.gaps(size), a.take(size)
        out = np.zeros((r, c))
        n = np.arange(r)
        diag = n < c
        out[n[diag], n[diag]] = (v[n] * aa[n] / g[n])[diag]
        sub = (n >= 1) & (n - 1 < c)
        out[n[sub], n[sub] - 1] = (-v[n - 1] * aa[n] / g[n])[sub]
        return out

    return TriangleMatrix(block, band=1, label=f"B[{lam.describe()}]({a.label})")


def t_lambda_matrix(lam: LambdaWeights, a: LazySequence) -> TriangleMatrix:
    """``T`` with ``sum_{k<=n} a_k x_k = (T y)_n`` whenever ``y = Lambda(x)``.

    Row ``n`` holds ``value(k) * dbar(a)_k`` for ``k < n`` and
    ``value(n) a_n / gap(n)`` on the diagonal.
    """

    def block(r, c):
        size = max(r, c) + 1
        lam.check_gaps(size)
        v, g, aa = lam.values(size), lam.gaps(size), a.take(size)
        z = aa / g
        u = (z[:-1] - z[1:]) * v[:-1]
        out = np.tril(np.broadcast_to(u[:c], (r, c)), -1).copy()
        n = np.arange(min(r, c))
        out[n, n] = v[n] * aa[n] / g[n]
        return out

    return TriangleMatrix(block, label=f"T[{lam.describe()}]({a.label})")


class DualSetId(str, enum.Enum):
    M1 = "m1"
    M2 = "m2"
    M3 = "m3"
    M4 = "m4"
    M5 = "m5"


_COMPOSITES = {
    ("alpha", "cs"): ("m1",),
    ("alpha", "cs0"): ("m2",),
    ("alpha", "bs"): ("m2",),
    ("beta", "cs"): ("m3", "m4"),
    ("beta", "cs0"): ("m3", "m4"),
    ("beta", "bs"): ("m3", "m5"),
    ("gamma", "cs"): ("m3", "m4"),
    ("gamma", "cs0"): ("m3", "m4"),
    ("gamma", "bs"): ("m3", "m4"),
}


def resolve_dual(dual: str) -> tuple[DualSetId, ...]:
    """Map ``m1``..``m5`` or ``alpha(cs)``, ``beta(bs_lambda)``, ... to basic sets."""
    text = dual.strip().replace(" ", "")
    try:
        return (DualSetId(text),)
    except ValueError:
        pass
    if "(" in text and text.endswith(")"):
        kind, space = text[:-1].split("(", 1)
        space = space.removesuffix("_lambda").removesuffix("^lambda")
        key = (kind, space)
        if key in _COMPOSITES:
            return tuple(DualSetId(s) for s in _COMPOSITES[key])
    raise ValueError(f"unknown dual {dual!r}; use m1..m5 or alpha|beta|gamma(cs|cs0|bs)")


# finite-subset suprema --------------------------------------------------------

def _subset_masks(count: int) -> np.ndarray:
    if count > MAX_SUBSET_DEPTH + 1:
        raise SubsetDepthTooLarge(f"{count} indices means {2 ** count} subsets")
    ints = np.arange(2**count, dtype=np.int64)
    return ((ints[:, None] >> np.arange(count)) & 1).astype(float)


def subset_supremum(C: np.ndarray) -> tuple[float, list[int], list[int]]:
    """Exact ``max |sum_{n in N} sum_{k in K} C[n, k]|`` over all row/column subsets.

    For a fixed column set the best row set takes every row whose restricted
    sum is positive (or every negative one), so only column subsets are
    enumerated.  Returns the value and a maximizing ``(N, K)``.
    """
    C = np.asarray(C, dtype=float)
    masks = _subset_masks(C.shape[1])
    r = masks @ C.T
    pos = np.where(r > 0, r, 0.0).sum(axis=1)
    neg = np.where(r < 0, -r, 0.0).sum(axis=1)
    best = np.maximum(pos, neg)
    i = int(np.argmax(best))
    K = [int(k) for k in np.nonzero(masks[i])[0]]
    N = [int(n) for n in np.nonzero(r[i] > 0 if pos[i] >= neg[i] else r[i] < 0)[0]]
    return float(best[i]), N, K


def subset_power_supremum(C: np.ndarray, p: float) -> tuple[float, list[int]]:
    """``max_K sum_n |sum_{k in K} C[n, k]|**p`` over column subsets ``K``."""
    C = np.asarray(C, dtype=float)
    masks = _subset_masks(C.shape[1])
    vals = (np.abs(masks @ C.T) ** p).sum(axis=1)
    i = int(np.argmax(vals))
    return float(vals[i]), [int(k) for k in np.nonzero(masks[i])[0]]


def subset_depth_ladder(subset_depth: int) -> list[int]:
    """Subset depths compared for stabilization, e.g. 10 -> [6, 8, 10]."""
    return sorted({max(0, subset_depth - 4), max(0, subset_depth - 2), subset_depth})


def subset_sup_verdict(diff_block, abs_bound: np.ndarray, subset_depth: int, tol: float,
                       p: float | None = None, subject: str = "") -> Verdict:
    """Boundedness verdict for a finite-subset supremum condition.

    ``diff_block(size)`` gives the ``size x size`` corner of the difference
    matrix ``C``; ``abs_bound[D]`` is the triangle-inequality bound over rows
    ``n <= D`` (running sums of ``sum_k |C_nk|``, raised to ``p`` per row for
    the power form).  The condition holds when that bound is bounded-looking
    and the exact restricted suprema over ``{0..d}`` for ``d`` in the ladder
    have non-increasing increments.  It fails when the bound grows and the
    suprema keep growing by non-shrinking steps.
    """
    if subset_depth > MAX_SUBSET_DEPTH:
        raise SubsetDepthTooLarge(f"subset_depth {subset_depth} exceeds {MAX_SUBSET_DEPTH}")
    ladder = subset_depth_ladder(subset_depth)
    sups, witnesses = [], []
    for d in ladder:
        C = diff_block(d + 1)
        if p is None:
            val, N, K = subset_supremum(C)
            witnesses.append({"N": N, "K": K})
        else:
            val, K = subset_power_supremum(C, p)
            witnesses.append({"K": K})
        sups.append(val)
    incs = np.diff(sups)
    bound_v = bounded_verdict(abs_bound, tol)
    evidence = {
        "method": "restricted-subset-supremum",
        "ladder": ladder,
        "restricted_suprema": sups,
        "maximizers": witnesses,
        "absolute_bound": float(abs_bound[-1]) if len(abs_bound) else 0.0,
        "absolute_bound_trend": bound_v.evidence.get("trend"),
        "absolute_bound_slope": bound_v.evidence.get("slope"),
    }
    stabilizing = bool(np.all(incs[1:] <= incs[:-1] + tol)) if len(incs) > 1 else True
    evidence["suprema_stabilizing"] = stabilizing
    depth = len(abs_bound)
    if bound_v.holds and stabilizing:
        return Verdict(Conclusion.HOLDS, depth, tol, evidence, subject)
    growing = len(incs) > 0 and bool(np.all(incs > tol)) and not stabilizing or (
        len(incs) > 1 and bool(np.all(incs > tol)) and incs[-1] >= incs[0] - tol)
    if bound_v.fails and growing:
        evidence["witness"] = witnesses[-1]
        return Verdict(Conclusion.FAILS, depth, tol, evidence, subject)
    return Verdict(Conclusion.INCONCLUSIVE, depth, tol, evidence, subject)


# dual membership ----------------------------------------------------------------

def _b_bands(lam: LambdaWeights, a: LazySequence, m: int) -> tuple[np.ndarray, np.ndarray]:
    lam.check_gaps(m)
    v, g, aa = lam.values(m), lam.gaps(m), a.take(m)
    diag = v * aa / g
    sub = -np.concatenate(([0.0], v[:-1])) * aa / g
    return diag, sub


def _m12_verdict(lam, a, which, depth, subset_depth, tol):
    diag, sub = _b_bands(lam, a, depth)
    # row n of the difference matrix touches three columns; absolute sums are equal for both shifts
    row_abs = np.abs(sub) + np.abs(diag - sub) + np.abs(diag)
    bound = compensated_cumsum(row_abs)
    B = b_lambda_matrix(lam, a)

    def diff_block(size):
        full = B.block(size, size + 2)
        if which == "m1":
            shifted = np.concatenate((np.zeros((size, 1)), full[:, :-1]), axis=1)
        else:
            shifted = np.concatenate((full[:, 1:], np.zeros((size, 1))), axis=1)
        return (full - shifted)[:, :size]

    formula = {"m1": "sup_{N,K finite} |sum_{n in N} sum_{k in K} (b_nk - b_{n,k-1})| < inf",
               "m2": "sup_{N,K finite} |sum_{n in N} sum_{k in K} (b_nk - b_{n,k+1})| < inf"}[which]
    v = subset_sup_verdict(diff_block, bound, subset_depth, tol, subject=which)
    return Verdict(v.conclusion, v.depth, tol, dict(v.evidence, formula=formula), which)


def _m3_verdict(lam, a, depth, tol):
    lam.check_gaps(depth + 2)
    v = lam.values(depth + 2)
    z = a.take(depth + 2) / lam.gaps(depth + 2)
    u = (z[:-1] - z[1:]) * v[:-1]
    terms = np.abs(u[:-1] - u[1:])
    verdict = limit_verdict(compensated_cumsum(terms), tol, subject="m3")
    return Verdict(verdict.conclusion, verdict.depth, tol,
                   dict(verdict.evidence, formula="sum_k |u_k - u_{k+1}| < inf, u_k = value(k) dbar(a)_k"), "m3")


def _m4_verdict(lam, a, depth, tol):
    w = _weighted(lam, a, depth)
    verdict = bounded_verdict(w, tol, subject="m4")
    return Verdict(verdict.conclusion, verdict.depth, tol,
                   dict(verdict.evidence, formula="sup_k |value(k) a_k / gap(k)| < inf"), "m4")


def _m5_verdict(lam, a, depth, tol):
    w = _weighted(lam, a, depth)
    absolute = limit_verdict(np.abs(w), tol, subject="m5")
    signed = limit_verdict(w, tol, subject="m5 (signed)")
    return Verdict(absolute.conclusion, absolute.depth, tol,
                   dict(absolute.evidence, formula="lim_k |value(k) a_k / gap(k)| exists",
                        signed_limit=signed.to_dict()), "m5")


def dual_membership(lam: LambdaWeights, a: LazySequence, dual, depth: int = DEFAULT_DEPTH,
                    subset_depth: int = 10, tol: float = DEFAULT_TOL) -> Verdict:
    """Verdict for ``a`` in a basic set ``m1..m5`` or a named dual.

    Composite duals take the conjunction of their basic sets.
    """
    if subset_depth > MAX_SUBSET_DEPTH:
        raise SubsetDepthTooLarge(f"subset_depth {subset_depth} exceeds {MAX_SUBSET_DEPTH}")
    if depth < 16:
        raise ValueError("depth must be at least 16")
    ids = resolve_dual(dual if isinstance(dual, str) else dual.value)
    parts = []
    for sid in ids:
        if sid in (DualSetId.M1, DualSetId.M2):
            parts.append(_m12_verdict(lam, a, sid.value, depth, subset_depth, tol))
        elif sid is DualSetId.M3:
            parts.append(_m3_verdict(lam, a, depth, tol))
        elif sid is DualSetId.M4:
            parts.append(_m4_verdict(lam, a, depth, tol))
        else:
            parts.append(_m5_verdict(lam, a, depth, tol))
    label = dual if isinstance(dual, str) else dual.value
    if len(parts) == 1:
        return parts[0].with_subject(f"{a.label} in {label}")
    return conjunction(parts, f"{a.label} in {label} = " + " & ".join(s.value for s in ids), depth, tol)


def brute_force_subset_supremum(C: np.ndarray) -> float:
    """Enumerate every (N, K) pair; exponential, for cross-checking only."""
    C = np.asarray(C, dtype=float)
    rows, cols = C.shape
    best = 0.0
    for N in itertools.product((0, 1), repeat=rows):
        rsel = np.array(N, dtype=bool)
        sub = C[rsel].sum(axis=0) if rsel.any() else np.zeros(cols)
        for K in itertools.product((0, 1), repeat=cols):
            best = max(best, abs(float(sub[np.array(K, dtype=bool)].sum())))
    return best
