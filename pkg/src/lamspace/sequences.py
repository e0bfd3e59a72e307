"""Lazily evaluated infinite sequences.

A :class:`LazySequence` stands for an element of ``w``, the space of all
scalar sequences indexed from 0.  Values are produced on demand either by a
per-index rule or by a vectorized *block* function returning the first ``m``
values.  Index ``-1`` (and any negative index) evaluates to zero.
"""

from __future__ import annotations

import threading
from typing import Callable, Sequence

import numpy as np

from ._numerics import compensated_cumsum

__all__ = [
    "LazySequence",
    "PartialSumSeries",
    "TAIL_RULES",
    "zero",
    "constant",
    "unit",
    "harmonic",
    "alternating",
    "from_list",
    "from_rule",
]

TAIL_RULES = ("zero", "repeat-last", "arithmetic", "geometric")

_MIN_BLOCK = 64


class LazySequence:
    """An infinite scalar sequence evaluated on demand.

    Parameters
    ----------
    rule : callable, optional
        ``rule(k)`` returns the value at index ``k >= 0``.
    block : callable, optional
        ``block(m)`` returns a 1-d array holding the first ``m`` values.  Must
        be prefix-stable (its first ``j`` entries do not depend on ``m``).
    label : str, optional
        Human-readable closed form, carried into reports.
    dtype : numpy dtype
        ``float`` by default; ``complex`` is accepted.

    Notes
    -----
    Prefixes computed from ``block`` are cached per instance under a lock.
    Previously returned entries are never recomputed, so repeated evaluation
    is bit-identical.
    """

    def __init__(
        self,
        rule: Callable[[int], complex] | None = None,
        *,
        block: Callable[[int], np.ndarray] | None = None,
        label: str | None = None,
        dtype=float,
    ):
        if rule is None and block is None:
            raise ValueError("need a rule or a block function")
        self._rule = rule
        self._block = block
        self.label = label
        self.dtype = np.dtype(dtype)
        self._cache = np.empty(0, dtype=self.dtype)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"LazySequence({self.label or '<anonymous>'})"

    def _compute(self, m: int) -> np.ndarray:
        if self._block is not None:
            out = np.asarray(self._block(m), dtype=self.dtype)
            if out.shape != (m,):
                raise ValueError(f"block({m}) returned shape {out.shape}")
            return out
        return np.array([self._rule(k) for k in range(m)], dtype=self.dtype)

    def take(self, m: int) -> np.ndarray:
        """Return a fresh array with the first ``m`` values."""
        if m < 0:
            raise ValueError("m must be non-negative")
        cached = self._cache
        if m <= len(cached):
            return cached[:m].copy()
        with self._lock:
            cached = self._cache
            if m > len(cached):
                size = max(m, 2 * len(cached), _MIN_BLOCK)
                fresh = self._compute(size)
                fresh[: len(cached)] = cached
                self._cache = fresh
            return self._cache[:m].copy()

    def __getitem__(self, k):
        if isinstance(k, slice):
            start, stop, step = k.start or 0, k.stop, k.step or 1
            if stop is None or start < 0 or stop < 0:
                raise IndexError("slices of an infinite sequence need explicit non-negative bounds")
            return self.take(stop)[start:stop:step]
        k = int(k)
        if k < 0:
            return self.dtype.type(0)
        if self._rule is not None and self._block is None:
            return self.dtype.type(self._rule(k))
        return self.take(k + 1)[k]

    def __call__(self, k: int):
        return self[k]

    # termwise arithmetic, used for linearity checks and basis residuals
    def _combine(self, other, op, symbol: str) -> "LazySequence":
        if isinstance(other, LazySequence):
            dtype = np.result_type(self.dtype, other.dtype)
            label = f"({self.label} {symbol} {other.label})"
            return LazySequence(block=lambda m: op(self.take(m), other.take(m)), label=label, dtype=dtype)
        c = other
        dtype = np.result_type(self.dtype, np.asarray(c).dtype)
        return LazySequence(block=lambda m: op(self.take(m), c), label=f"({self.label} {symbol} {c!r})", dtype=dtype)

    def __add__(self, other):
        return self._combine(other, np.add, "+")

    def __sub__(self, other):
        return self._combine(other, np.subtract, "-")

    def __mul__(self, other):
        return self._combine(other, np.multiply, "*")

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return LazySequence(block=lambda m: -self.take(m), label=f"-{self.label}", dtype=self.dtype)

    def map(self, fn: Callable[[np.ndarray], np.ndarray], label: str | None = None) -> "LazySequence":
        """Apply a vectorized elementwise function."""
        return LazySequence(block=lambda m: fn(self.take(m)), label=label, dtype=self.dtype)


class PartialSumSeries(LazySequence):
    """The sequence of partial sums ``sum(m) = base(0) + ... + base(m)``."""

    def __init__(self, base: LazySequence):
        self.base = base
        super().__init__(
            block=lambda m: compensated_cumsum(base.take(m)),
            label=f"partial sums of {base.label}",
            dtype=np.result_type(base.dtype, float),
        )

    def sum(self, m: int):
        return self[m]


# builtin sequences ---------------------------------------------------------

def zero() -> LazySequence:
    return LazySequence(block=lambda m: np.zeros(m), label="theta")


def constant(c: float = 1.0) -> LazySequence:
    label = "e" if c == 1.0 else f"constant({c!r})"
    return LazySequence(block=lambda m: np.full(m, c, dtype=float), label=label)


def unit(n: int) -> LazySequence:
    """The sequence ``e^(n)`` with a single 1 at index ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def block(m):
        out = np.zeros(m)
        if n < m:
            out[n] = 1.0
        return out

    return LazySequence(block=block, label=f"e^({n})")


def harmonic() -> LazySequence:
    """``x_k = 1/(k+1)``."""
    return LazySequence(block=lambda m: 1.0 / np.arange(1, m + 1, dtype=float), label="1/(k+1)")


def alternating() -> LazySequence:
    """``x_k = (-1)^k``."""
    return LazySequence(block=lambda m: np.where(np.arange(m) % 2 == 0, 1.0, -1.0), label="(-1)^k")


def from_rule(rule: Callable[[int], float], label: str | None = None, dtype=float) -> LazySequence:
    return LazySequence(rule, label=label, dtype=dtype)


def from_list(values: Sequence[float], tail: str, label: str | None = None) -> LazySequence:
    """Extend a finite list to an infinite sequence with an explicit tail rule.

    ``tail`` is one of ``zero``, ``repeat-last``, ``arithmetic`` (continue with
    the last difference) or ``geometric`` (continue with the last ratio).
    """
    vals = np.asarray(list(values), dtype=float)
    if tail not in TAIL_RULES:
        raise ValueError(f"unknown tail rule {tail!r}; expected one of {TAIL_RULES}")
    n = len(vals)
    if n == 0 and tail != "zero":
        raise ValueError("an empty list only admits the zero tail")
    if tail in ("arithmetic", "geometric") and n < 2:
        raise ValueError(f"the {tail} tail needs at least two listed values")
    if tail == "geometric" and vals[-2] == 0:
        raise ValueError("the geometric tail needs a nonzero second-to-last value")

    def block(m):
        out = np.zeros(m)
        head = min(m, n)
        out[:head] = vals[:head]
        if m > n and n > 0:
            steps = np.arange(1, m - n + 1, dtype=float)
            if tail == "repeat-last":
                out[n:] = vals[-1]
            elif tail == "arithmetic":
                out[n:] = vals[-1] + steps * (vals[-1] - vals[-2])
            elif tail == "geometric":
                out[n:] = vals[-1] * (vals[-1] / vals[-2]) ** steps
        return out

    return LazySequence(block=block, label=label or f"list[{n}]+{tail}")
