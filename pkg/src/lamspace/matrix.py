"""Row-generated infinite matrices."""

from __future__ import annotations

import threading
from typing import Callable, Sequence

import numpy as np

from .sequences import LazySequence
from .weights import LambdaWeights

__all__ = [
    "TriangleMatrix",
    "zero_matrix",
    "identity_matrix",
    "summation_matrix",
    "weighted_mean_matrix",
    "one_row_matrix",
    "from_rows",
    "from_entry_rule",
]

STRUCTURES = ("lower-triangular", "general")


class TriangleMatrix:
    """An infinite matrix ``A = (a_nk)`` evaluated in dense upper-left blocks.

    Parameters
    ----------
    block : callable
        ``block(rows, cols)`` returns the dense ``rows x cols`` upper-left
        corner as a float array.  Must be consistent across sizes.
    structure : {"lower-triangular", "general"}
        Lower-triangular matrices vanish above the diagonal; the block is
        masked accordingly.
    width : int, optional
        Required for general matrices: the caller-declared row decay depth.
        Entries with ``k >= width`` are treated as zero and the truncation is
        reported by :meth:`metadata`.
    band : int, optional
        Lower bandwidth, when known (``a_nk = 0`` for ``k < n - band``).
    """

    def __init__(self, block: Callable[[int, int], np.ndarray], *, structure: str = "lower-triangular",
                 width: int | None = None, band: int | None = None, label: str = "A"):
        if structure not in STRUCTURES:
            raise ValueError(f"structure must be one of {STRUCTURES}")
        if structure == "general":
            if width is None or width < 1:
                raise ValueError("general matrices need a declared row decay width >= 1")
        self._block = block
        self.structure = structure
        self.width = width
        self.band = band
        self.label = label
        self._cache = np.zeros((0, 0))
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"TriangleMatrix({self.label}, {self.structure})"

    @property
    def triangular(self) -> bool:
        return self.structure == "lower-triangular"

    def columns_needed(self, rows: int) -> int:
        """Columns that can hold nonzero entries in the first ``rows`` rows."""
        return rows if self.triangular else self.width

    def block(self, rows: int, cols: int) -> np.ndarray:
        cached = self._cache
        if rows <= cached.shape[0] and cols <= cached.shape[1]:
            return cached[:rows, :cols].copy()
        with self._lock:
            r = max(rows, self._cache.shape[0])
            c = max(cols, self._cache.shape[1])
            eff = c if self.triangular else min(c, self.width)
            out = np.zeros((r, c))
            if r and eff:
                out[:, :eff] = np.asarray(self._block(r, eff), dtype=float)
            if self.triangular:
                out = np.tril(out)
            self._cache = out
            return out[:rows, :cols].copy()

    def entry(self, n: int, k: int) -> float:
        if n < 0 or k < 0:
            return 0.0
        return float(self.block(n + 1, k + 1)[n, k])

    def metadata(self) -> dict:
        meta = {"label": self.label, "structure": self.structure}
        if not self.triangular:
            meta["row_truncation_width"] = self.width
        if self.band is not None:
            meta["band"] = self.band
        return meta

    def upper_zero_violations(self, size: int) -> list[tuple[int, int]]:
        """Spot-check the triangle zero pattern on the raw generator."""
        if not self.triangular:
            return []
        raw = np.asarray(self._block(size, size), dtype=float)
        bad = np.argwhere(np.triu(raw, 1) != 0)
        return [tuple(int(i) for i in b) for b in bad]


def _from_entry(rule: Callable[[np.ndarray, np.ndarray], np.ndarray]):
    def block(rows, cols):
        n, k = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
        return np.broadcast_to(rule(n, k), (rows, cols)).astype(float)

    return block


def zero_matrix() -> TriangleMatrix:
    return TriangleMatrix(lambda r, c: np.zeros((r, c)), label="zero", band=0)


def identity_matrix() -> TriangleMatrix:
    return TriangleMatrix(lambda r, c: np.eye(r, c), label="identity", band=0)


def summation_matrix() -> TriangleMatrix:
    """``a_nk = 1`` for ``k <= n``."""
    return TriangleMatrix(lambda r, c: np.ones((r, c)), label="summation")


def weighted_mean_matrix(lam: LambdaWeights) -> TriangleMatrix:
    """The weighted-mean matrix itself: ``gap(k)/value(n)`` for ``k <= n``."""

    def block(r, c):
        size = max(r, c)
        return lam.gaps(size)[None, :c] / lam.values(size)[:r, None]

    return TriangleMatrix(block, label=f"Lambda[{lam.describe()}]")


def one_row_matrix(a: LazySequence, width: int) -> TriangleMatrix:
    """General matrix whose row 0 is ``a`` (truncated at ``width``) and other rows vanish."""

    def block(r, c):
        out = np.zeros((r, c))
        if r:
            out[0, :] = a.take(c)
        return out

    return TriangleMatrix(block, structure="general", width=width, label=f"row[{a.label}]")


def from_rows(rows: Sequence[Sequence[float]], tail: str = "zero", structure: str = "lower-triangular",
              width: int | None = None, label: str = "inline") -> TriangleMatrix:
    """Matrix from explicit leading rows; later rows are zero or repeat the last row."""
    if tail not in ("zero", "repeat-last"):
        raise ValueError("matrix tail must be 'zero' or 'repeat-last'")
    given = [np.asarray(r, dtype=float) for r in rows]
    if structure == "general" and width is None:
        width = max((len(r) for r in given), default=1)
    if tail == "repeat-last" and structure == "lower-triangular" and given:
        raise ValueError("a repeated last row cannot stay lower-triangular; use structure 'general'")

    def block(r, c):
        out = np.zeros((r, c))
        for n in range(r):
            if n < len(given):
                row = given[n]
            elif tail == "repeat-last" and given:
                row = given[-1]
            else:
                break
            m = min(len(row), c)
            out[n, :m] = row[:m]
        return out

    return TriangleMatrix(block, structure=structure, width=width, label=label)


def from_entry_rule(rule: Callable[[np.ndarray, np.ndarray], np.ndarray], structure: str = "lower-triangular",
                    width: int | None = None, label: str = "rule") -> TriangleMatrix:
    """Matrix from a vectorized rule ``rule(n, k)`` on integer index grids."""
    return TriangleMatrix(_from_entry(rule), structure=structure, width=width, label=label)
