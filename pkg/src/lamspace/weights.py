"""Weight sequences for the weighted-mean transform.

A weight sequence is strictly increasing, positive and divergent.  Its
*gaps* ``gap(k) = value(k) - value(k-1)`` (with ``value(-1) = 0``) are kept as
a first-class sequence so that families with a natural gap (Riesz weights,
where the gap is the generating sequence ``q``) avoid the cancellation of a
floating-point difference.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from ._numerics import compensated_cumsum
from .errors import GapTooSmall, InvalidWeights
from .sequences import LazySequence

__all__ = ["LambdaWeights", "GAP_FLOOR_REL", "builtin_families"]

GAP_FLOOR_REL = 1e-12


def _diff_gaps(values: np.ndarray) -> np.ndarray:
    return np.diff(values, prepend=0.0)


class LambdaWeights:
    """A strictly increasing positive divergent sequence and its gaps.

    Build instances through the family constructors: :meth:`cesaro`,
    :meth:`power`, :meth:`geometric`, :meth:`riesz`, :meth:`custom` and
    :meth:`from_rule`.
    """

    def __init__(self, family: str, params: dict, values_block, gaps_block=None):
        self.family = family
        self.params = dict(params)
        self._values = LazySequence(block=values_block, label=self.describe())
        if gaps_block is None:
            self._gaps = LazySequence(block=lambda m: _diff_gaps(self._values.take(m)), label="gaps")
        else:
            self._gaps = LazySequence(block=gaps_block, label="gaps")

    # constructors ---------------------------------------------------------

    @classmethod
    def cesaro(cls) -> "LambdaWeights":
        """``value(k) = k + 1``; the transform is the arithmetic mean."""
        return cls("cesaro", {}, lambda m: np.arange(1, m + 1, dtype=float), lambda m: np.ones(m))

    @classmethod
    def power(cls, alpha: float) -> "LambdaWeights":
        """``value(k) = (k + 1)**alpha`` for ``alpha > 0``."""
        alpha = float(alpha)
        if not alpha > 0:
            raise InvalidWeights("power weights need alpha > 0")

        def values(m):
            with np.errstate(over="ignore"):
                return np.arange(1, m + 1, dtype=float) ** alpha

        def gaps(m):
            kk = np.arange(1, m, dtype=float)
            out = np.empty(m)
            out[:1] = 1.0
            # (k+1)^a - k^a without cancellation
            with np.errstate(over="ignore", invalid="ignore"):
                out[1:] = kk**alpha * np.expm1(alpha * np.log1p(1.0 / kk))
            return out

        return cls("power", {"alpha": alpha}, values, gaps)

    @classmethod
    def geometric(cls, r: float) -> "LambdaWeights":
        """``value(k) = r**(k + 1)`` for ``r > 1``."""
        r = float(r)
        if not r > 1:
            raise InvalidWeights("geometric weights need r > 1")

        def values(m):
            with np.errstate(over="ignore"):
                return r ** np.arange(1, m + 1, dtype=float)

        def gaps(m):
            with np.errstate(over="ignore", invalid="ignore"):
                out = r ** np.arange(m, dtype=float) * (r - 1.0)
            out[:1] = r
            return out

        return cls("geometric", {"r": r}, values, gaps)

    @classmethod
    def riesz(cls, q, label: str | None = None) -> "LambdaWeights":
        """Riesz weights ``value(k) = q_0 + ... + q_k`` with every ``q_k > 0``.

        ``q`` is a :class:`LazySequence` or a callable ``q(k)``.  The gaps are
        ``q`` itself, so ``lambda_matrix_entry`` reproduces ``q_k / Q_n`` exactly.
        """
        if callable(q) and not isinstance(q, LazySequence):
            q = LazySequence(q, label=label)
        if not isinstance(q, LazySequence):
            raise InvalidWeights("riesz weights need an infinite q sequence (LazySequence or callable)")

        def values(m):
            return compensated_cumsum(q.take(m))

        return cls("riesz", {"q": label or q.label}, values, q.take)

    @classmethod
    def custom(cls, values: Sequence[float], tail: str) -> "LambdaWeights":
        """Finite list of weights continued by an explicit tail rule.

        ``tail`` is ``arithmetic`` (repeat the last gap) or ``geometric``
        (repeat the last ratio).  There is no default.
        """
        vals = np.asarray(list(values), dtype=float)
        if tail not in ("arithmetic", "geometric"):
            raise InvalidWeights("custom weights need tail 'arithmetic' or 'geometric'")
        if len(vals) == 0:
            raise InvalidWeights("custom weights need at least one value")
        if vals[0] <= 0 or np.any(np.diff(vals) <= 0) or not np.all(np.isfinite(vals)):
            raise InvalidWeights("custom weights must be positive, finite and strictly increasing")
        if tail == "geometric" and len(vals) < 2:
            raise InvalidWeights("the geometric tail needs at least two values")
        n = len(vals)
        last_gap = vals[-1] - vals[-2] if n >= 2 else vals[0]
        ratio = vals[-1] / vals[-2] if n >= 2 else None

        def block(m):
            out = np.empty(m)
            head = min(m, n)
            out[:head] = vals[:head]
            if m > n:
                steps = np.arange(1, m - n + 1, dtype=float)
                if tail == "arithmetic":
                    out[n:] = vals[-1] + steps * last_gap
                else:
                    out[n:] = vals[-1] * ratio**steps
            return out

        return cls("custom", {"values": vals.tolist(), "tail": tail}, block)

    @classmethod
    def from_rule(cls, rule: Callable[[int], float], label: str) -> "LambdaWeights":
        """Weights from an arbitrary per-index rule (validated lazily)."""
        return cls("custom", {"rule": label}, lambda m: np.array([rule(k) for k in range(m)], dtype=float))

    # evaluation -----------------------------------------------------------

    def describe(self) -> str:
        if not self.params:
            return self.family
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})"

    def descriptor(self) -> dict:
        return {"family": self.family, **self.params}

    def __repr__(self) -> str:
        return f"LambdaWeights({self.describe()})"

    def values(self, m: int) -> np.ndarray:
        """First ``m`` weights, validated."""
        out = self._values.take(m)
        self._validate(out, self._gaps.take(m))
        return out

    def gaps(self, m: int) -> np.ndarray:
        """First ``m`` gaps ``value(k) - value(k-1)``, validated."""
        out = self._gaps.take(m)
        self._validate(self._values.take(m), out)
        return out

    def value(self, k: int) -> float:
        if k < 0:
            return 0.0
        return float(self.values(k + 1)[k])

    def gap(self, k: int) -> float:
        if k < 0:
            return 0.0
        return float(self.gaps(k + 1)[k])

    def as_sequence(self) -> LazySequence:
        return self._values

    def _validate(self, values: np.ndarray, gaps: np.ndarray) -> None:
        if not np.all(np.isfinite(values)):
            bad = int(np.argmin(np.isfinite(values)))
            raise InvalidWeights(f"{self.describe()}: weight at index {bad} is not finite (overflow)")
        if len(gaps) and not np.all(gaps > 0):
            bad = int(np.argmin(gaps > 0))
            raise InvalidWeights(f"{self.describe()}: weights are not strictly increasing at index {bad}")

    def gap_floor(self, m: int) -> np.ndarray:
        """Per-index floor ``1e-12 * max(1, value(k))`` below which inversion refuses."""
        return GAP_FLOOR_REL * np.maximum(1.0, self.values(m))

    def check_gaps(self, m: int) -> None:
        """Raise :class:`GapTooSmall` for the first index below the gap floor."""
        g = self.gaps(m)
        floor = self.gap_floor(m)
        low = np.nonzero(g < floor)[0]
        if low.size:
            k = int(low[0])
            raise GapTooSmall(k, float(g[k]), float(floor[k]))


def builtin_families() -> list[LambdaWeights]:
    """Representative instances of every builtin family, usable to depth 10^3."""
    q = LazySequence(block=lambda m: 1.0 + (np.arange(m) % 3), label="1+(k mod 3)")
    return [
        LambdaWeights.cesaro(),
        LambdaWeights.power(2.0),
        LambdaWeights.power(0.5),
        LambdaWeights.geometric(2.0),
        LambdaWeights.riesz(q, label="1+(k mod 3)"),
        LambdaWeights.custom([1.0, 3.0, 4.0, 8.0], tail="arithmetic"),
    ]
