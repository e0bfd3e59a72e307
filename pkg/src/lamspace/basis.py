"""Schauder basis of the lambda series spaces and truncated expansions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import LazySequence
from .spaces import classify
from .transform import lambda_transform, series_norm
from .verdict import Verdict
from .weights import LambdaWeights

__all__ = ["BasisVector", "basis_vector", "Expansion", "basis_expansion"]


@dataclass(frozen=True)
class BasisVector:
    """``e_lambda^(n)``: the preimage of the unit sequence ``e^(n)``.

    Nonzero only at ``k = n`` (``value(n)/gap(n)``) and ``k = n + 1``
    (``-value(n)/gap(n+1)``).
    """

    n: int
    weights: LambdaWeights
    sequence: LazySequence

    def __getitem__(self, k: int) -> float:
        return self.sequence[k]


def basis_vector(lam: LambdaWeights, n: int) -> BasisVector:
    if n < 0:
        raise ValueError("n must be non-negative")

    def block(m):
        out = np.zeros(m)
        if n < m:
            g = lam.gaps(max(m, n + 2))
            vn = lam.value(n)
            out[n] = vn / g[n]
            if n + 1 < m:
                out[n + 1] = -vn / g[n + 1]
        return out

    return BasisVector(n, lam, LazySequence(block=block, label=f"e_lambda^({n})"))


@dataclass(frozen=True)
class Expansion:
    m: int
    coefficients: np.ndarray
    truncation: LazySequence
    residual_norm: float
    probe_depth: int
    in_space: Verdict | None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "residual_norm": self.residual_norm,
            "probe_depth": self.probe_depth,
            "in_space": None if self.in_space is None else self.in_space.to_dict(),
            "residual_meaningful": None if self.in_space is None else self.in_space.holds,
        }


def basis_expansion(lam: LambdaWeights, x: LazySequence, m: int, probe_depth: int | None = None,
                    check_membership: bool = True, tol: float = 1e-8) -> Expansion:
    """Truncated expansion ``sum_{n<=m} Lambda_n(x) e_lambda^(n)`` and its residual.

    The residual is ``|| x - truncation ||`` in the lambda series norm, taken
    over partial sums up to ``probe_depth`` (default ``4 m``).  It is only
    meaningful when ``x`` lies in ``cs_lambda``; ``in_space`` records that
    classification when ``check_membership`` is set.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    probe = 4 * m if probe_depth is None else probe_depth
    probe = max(probe, m + 2)
    coeffs = lambda_transform(lam, x).take(m + 1)

    def block(size):
        # each basis vector touches two indices; accumulate their contributions
        out = np.zeros(size)
        g = lam.gaps(max(size, m + 2))
        v = lam.values(m + 1)
        idx = np.arange(m + 1)
        head = idx < size
        np.add.at(out, idx[head], (coeffs * v / g[: m + 1])[head])
        nxt = idx + 1
        tail = nxt < size
        np.add.at(out, nxt[tail], (-coeffs * v / g[1: m + 2])[tail])
        return out

    truncation = LazySequence(block=block, label=f"expansion[{m}]({x.label})")
    residual = series_norm(lambda_transform(lam, x - truncation), probe).value
    in_space = classify(x, "cs_lambda", lam, depth=max(probe, 16), tol=tol) if check_membership else None
    return Expansion(m, coeffs, truncation, residual, probe, in_space)
