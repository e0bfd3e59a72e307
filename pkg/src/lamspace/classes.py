"""Membership certificates for matrix classes ``(X : Y)``.

A matrix maps ``X`` into ``Y`` exactly when a short list of conditions on
its entries holds.  This module evaluates those conditions numerically on an
upper-left block and assembles a :class:`ConditionCertificate`.

Sources are ``cs, cs0, bs`` (classical) or their lambda-domains; targets are
``l1, lp(p), c, c0, linf``.  Lambda-domain classes are reduced to conditions
on the derived matrix ``A~`` (see :func:`a_tilde`) plus a few conditions on
``A`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._numerics import compensated_cumsum
from .duals import subset_sup_verdict
from .errors import UnsupportedPair
from .matrix import TriangleMatrix, weighted_mean_matrix
from .sequences import LazySequence
from .spaces import SpaceTag
from .transform import inverse_lambda_transform
from .verdict import (
    DEFAULT_TOL,
    Conclusion,
    Verdict,
    bounded_verdict,
    combine_conclusions,
    conjunction,
    finite_verdict,
    limit_verdict,
)
from .weights import LambdaWeights

__all__ = [
    "ATilde",
    "a_tilde",
    "ConditionResult",
    "ConditionCertificate",
    "classical_class_check",
    "lambda_class_check",
    "verify_regularity",
    "supported_pairs",
    "DEFAULT_CLASS_DEPTH",
    "ROW_QUANTITY_READINGS",
]

DEFAULT_CLASS_DEPTH = 512
MAX_PROBE_COLUMNS = 64
ROW_QUANTITY_READINGS = ("row-limit", "row-sum")

NORMALIZATION_NOTES = (
    "in the row-variation conditions on A~, the printed second index 'k-1' / 'k+1' "
    "is read as the entry of the same row, a~_{n,k-1} / a~_{n,k+1}",
)


CAVEATS = {
    ("bs", "c"): "the row-variation series is only required to converge row by row; "
                 "uniform convergence in n is not part of this condition list, so e.g. "
                 "the identity matrix passes although it does not map bs into c",
}


class ATilde(TriangleMatrix):
    """``a~_nk = (a_nk/gap(k) - a_{n,k+1}/gap(k+1)) * value(k)``.

    For a lower-triangular ``A`` the result is lower-triangular with
    ``a~_nn = value(n) a_nn / gap(n)``.  A general ``A`` keeps its declared
    width; the entry just before the width then sees a zero neighbour.
    """

    def __init__(self, lam: LambdaWeights, A: TriangleMatrix):
        self.weights = lam
        self.source = A

        def block(r, c):
            size = max(r, c) + 1
            lam.check_gaps(size)
            v, g = lam.values(size), lam.gaps(size)
            z = A.block(r, c + 1) / g[None, : c + 1]
            return (z[:, :-1] - z[:, 1:]) * v[None, :c]

        super().__init__(block, structure=A.structure, width=A.width,
                         band=A.band, label=f"tilde[{lam.describe()}]({A.label})")


def a_tilde(lam: LambdaWeights, A: TriangleMatrix) -> ATilde:
    return ATilde(lam, A)


@dataclass(frozen=True)
class ConditionResult:
    id: str
    formula: str
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"id": self.id, "formula": self.formula, **self.verdict.to_dict()}


@dataclass(frozen=True)
class ConditionCertificate:
    source: str
    target: str
    conditions: tuple[ConditionResult, ...]
    metadata: dict = field(default_factory=dict)

    @property
    def overall(self) -> Conclusion:
        return combine_conclusions(c.verdict.conclusion for c in self.conditions)

    @property
    def holds(self) -> bool:
        return self.overall is Conclusion.HOLDS

    def condition(self, cid: str) -> ConditionResult:
        for c in self.conditions:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def to_dict(self) -> dict:
        from .verdict import _jsonable

        return _jsonable({
            "class": f"({self.source} : {self.target})",
            "source": self.source,
            "target": self.target,
            "overall": self.overall.value,
            "conditions": [c.to_dict() for c in self.conditions],
            "metadata": self.metadata,
        })


# evaluation context ------------------------------------------------------------

class _Block:
    """Dense view of a matrix for condition evaluation.

    ``full`` has one spare zero column to the right so that both forward and
    backward differences see complete rows.  For general matrices ``interior``
    is the number of leading columns untouched by the width truncation; tests
    that run along a row stop there.
    """

    def __init__(self, M: TriangleMatrix, depth: int):
        self.matrix = M
        self.rows = depth
        self.cols = depth if M.triangular else M.width
        self.full = M.block(depth, self.cols + 1)
        self.triangular = M.triangular
        self.interior = self.cols if M.triangular else max(self.cols - 2, 0)

    def diff(self, shift: int) -> np.ndarray:
        """``m_nk - m_{n,k+shift}`` over every column that can be nonzero."""
        F = self.full
        if shift < 0:
            return F - np.concatenate((np.zeros((F.shape[0], 1)), F[:, :-1]), axis=1)
        return F[:, :-1] - F[:, 1:]

    def diff_block(self, shift: int):
        M = self.matrix

        def block(size):
            F = M.block(size, size + 2)
            if shift < 0:
                D = F - np.concatenate((np.zeros((size, 1)), F[:, :-1]), axis=1)
            else:
                D = np.concatenate((F[:, :-1] - F[:, 1:], np.zeros((size, 1))), axis=1)
            return D[:, :size]

        return block


def _sym(shift: int) -> str:
    return "k-1" if shift < 0 else "k+1"


def _per_row(blk: _Block, values: np.ndarray, test, what: str, tol: float) -> Verdict:
    """A per-row condition along ``k``.

    Rows of a lower-triangular matrix are finitely supported, so such
    conditions hold row by row.  For general matrices each row prefix up to
    the interior width is tested and the verdicts are combined.
    """
    if blk.triangular:
        return finite_verdict(0.0, blk.rows, tol, what, reason="rows are finitely supported")
    if blk.interior < 16:
        return finite_verdict(0.0, blk.rows, tol, what,
                              reason=f"rows truncated at declared width {blk.cols}")
    verdicts = [test(values[n, : blk.interior]) for n in range(blk.rows)]
    conclusion = combine_conclusions(v.conclusion for v in verdicts)
    bad = [n for n, v in enumerate(verdicts) if v.conclusion is not Conclusion.HOLDS]
    evidence = {"method": "per-row", "rows_checked": blk.rows, "row_length": blk.interior,
                "rows_not_holding": bad[:16]}
    if bad:
        evidence["first_row_evidence"] = verdicts[bad[0]].to_dict()
    return Verdict(conclusion, blk.rows, tol, evidence, what)


def _row_variation(blk: _Block, shift: int, tol: float) -> np.ndarray:
    d = np.abs(blk.diff(shift))
    if not blk.triangular:
        d = d[:, : blk.interior]
    return d.sum(axis=1)


def _cond_row_variation_sup(blk, shift, tol, name):
    sums = _row_variation(blk, shift, tol)
    parts = [bounded_verdict(sums, tol, subject="sup over rows")]
    if not blk.triangular:
        d = np.abs(blk.diff(shift))
        parts.append(_per_row(blk, d, lambda r: limit_verdict(compensated_cumsum(r), tol),
                              "each row series converges", tol))
    v = conjunction(parts, name, blk.rows, tol) if len(parts) > 1 else parts[0]
    evidence = dict(v.evidence, row_values_head=sums[:8].tolist(), sup=float(np.max(sums, initial=0.0)))
    return Verdict(v.conclusion, blk.rows, tol, evidence, name)


def _cond_row_variation_each(blk, shift, tol, name):
    d = np.abs(blk.diff(shift))
    v = _per_row(blk, d, lambda r: limit_verdict(compensated_cumsum(r), tol), name, tol)
    return v


def _cond_row_variation_limit(blk, shift, tol, name, target):
    sums = _row_variation(blk, shift, tol)
    return limit_verdict(sums, tol, target=target, subject=name)


def _probe_columns(blk: _Block) -> int:
    # a column of a triangle starts at the diagonal; keeping k below depth/16 puts
    # that start before the earliest dyadic window of the limit test
    return max(1, min(MAX_PROBE_COLUMNS, blk.interior, blk.rows // 16))


def _cond_columns(blk, tol, name, target, differenced):
    K = _probe_columns(blk)
    if differenced:
        cols = blk.full[:, :K] - blk.full[:, 1:K + 1]
    else:
        cols = blk.full[:, :K]
    verdicts = [limit_verdict(cols[:, k], tol, target=target) for k in range(K)]
    conclusion = combine_conclusions(v.conclusion for v in verdicts)
    bad = [k for k, v in enumerate(verdicts) if v.conclusion is not Conclusion.HOLDS]
    evidence = {"method": "per-column", "columns_checked": K, "column_length": blk.rows,
                "columns_not_holding": bad[:16],
                "limit_estimates_head": [float(c[-1]) for c in cols.T[:8]]}
    if bad:
        evidence["first_column_evidence"] = verdicts[bad[0]].to_dict()
    return Verdict(conclusion, blk.rows, tol, evidence, name)


def _cond_row_tails(blk, tol, name, values=None):
    vals = blk.full[:, : blk.cols] if values is None else values
    return _per_row(blk, vals, lambda r: limit_verdict(r, tol, target=0.0), name, tol)


def _cond_subset(blk, shift, tol, name, subset_depth, p=None):
    d = np.abs(blk.diff(shift))
    row_abs = d.sum(axis=1)
    bound = compensated_cumsum(row_abs if p is None else row_abs**p)
    size = min(subset_depth, blk.rows - 1)
    return subset_sup_verdict(blk.diff_block(shift), bound, size, tol, p=p, subject=name)


# condition catalogue -------------------------------------------------------------

def _formula(kind: str, m: str = "a", shift: int = 1, p: float | None = None) -> str:
    s = _sym(shift)
    return {
        "rowvar-sup": f"sup_n sum_k |{m}_nk - {m}_(n,{s})| < inf",
        "rowvar-each": f"sum_k |{m}_nk - {m}_(n,{s})| < inf for every n",
        "rowvar-lim-exists": f"lim_n sum_k |{m}_nk - {m}_(n,{s})| exists",
        "rowvar-lim-zero": f"lim_n sum_k |{m}_nk - {m}_(n,{s})| = 0",
        "col-exists": f"lim_n {m}_nk exists for every k",
        "col-zero": f"lim_n {m}_nk = 0 for every k",
        "coldiff-exists": f"lim_n ({m}_nk - {m}_(n,k+1)) exists for every k",
        "coldiff-zero": f"lim_n ({m}_nk - {m}_(n,k+1)) = 0 for every k",
        "row-tails": f"lim_k {m}_nk = 0 for every n",
        "subset": f"sup_(N,K finite) |sum_(n in N) sum_(k in K) ({m}_nk - {m}_(n,{s}))| < inf",
        "subset-p": f"sup_(K finite) sum_n |sum_(k in K) ({m}_nk - {m}_(n,{s}))|^p < inf, p = {p}",
    }[kind]


def _evaluate(kind, blk, tol, subset_depth, shift=1, p=None, m="a"):
    name = {
        "rowvar-sup": f"row-variation-sup[{_sym(shift)}]",
        "rowvar-each": f"row-variation-finite[{_sym(shift)}]",
        "rowvar-lim-exists": f"row-variation-limit-exists[{_sym(shift)}]",
        "rowvar-lim-zero": f"row-variation-limit-zero[{_sym(shift)}]",
        "col-exists": "column-limits-exist",
        "col-zero": "column-limits-zero",
        "coldiff-exists": "column-difference-limits-exist",
        "coldiff-zero": "column-difference-limits-zero",
        "row-tails": "row-tails-vanish",
        "subset": f"subset-sup[{_sym(shift)}]",
        "subset-p": f"subset-power-sup[{_sym(shift)}]",
    }[kind]
    if m != "a":
        name = "tilde-" + name
    if kind == "rowvar-sup":
        v = _cond_row_variation_sup(blk, shift, tol, name)
    elif kind == "rowvar-each":
        v = _cond_row_variation_each(blk, shift, tol, name)
    elif kind == "rowvar-lim-exists":
        v = _cond_row_variation_limit(blk, shift, tol, name, None)
    elif kind == "rowvar-lim-zero":
        v = _cond_row_variation_limit(blk, shift, tol, name, 0.0)
    elif kind in ("col-exists", "col-zero", "coldiff-exists", "coldiff-zero"):
        v = _cond_columns(blk, tol, name, 0.0 if kind.endswith("zero") else None, kind.startswith("coldiff"))
    elif kind == "row-tails":
        v = _cond_row_tails(blk, tol, name)
    elif kind == "subset":
        v = _cond_subset(blk, shift, tol, name, subset_depth)
    else:
        v = _cond_subset(blk, shift, tol, name, subset_depth, p)
    return ConditionResult(name, _formula(kind, m, shift, p), v.with_subject(name))


# conditions per classical pair, as (kind, shift)
_CLASSICAL = {
    ("cs", "l1"): [("subset", -1)],
    ("cs0", "l1"): [("subset", 1)],
    ("bs", "l1"): [("subset", 1), ("row-tails", 0)],
    ("cs", "c"): [("rowvar-sup", 1), ("col-exists", 0)],
    ("cs0", "c"): [("rowvar-sup", 1), ("coldiff-exists", 0)],
    ("bs", "c"): [("row-tails", 0), ("col-exists", 0), ("rowvar-each", -1)],
    ("cs", "linf"): [("rowvar-sup", -1)],
    ("cs0", "linf"): [("rowvar-sup", 1)],
    ("bs", "linf"): [("row-tails", 0), ("rowvar-sup", 1)],
    ("cs", "c0"): [("rowvar-sup", 1), ("col-zero", 0)],
    ("cs0", "c0"): [("rowvar-sup", 1), ("coldiff-zero", 0)],
    ("bs", "c0"): [("row-tails", 0), ("rowvar-lim-zero", 1)],
    ("cs", "lp"): [("subset-p", -1)],
    ("cs0", "lp"): [("subset-p", 1)],
    ("bs", "lp"): [("row-tails", 0), ("subset-p", 1)],
}

# conditions per lambda pair: ("a:<kind>") act on A, ("t:<kind>") on A~,
# ("q:<kind>") on the row quantity a_n
_LAMBDA = {
    ("cs", "linf"): [("t:rowvar-sup", -1), ("a:weighted-sup", 0)],
    ("cs0", "linf"): [("a:weighted-sup", 0), ("t:rowvar-sup", 1)],
    ("bs", "linf"): [("t:rowvar-sup", 1), ("a:weighted-limit", 0), ("t:row-tails", 0), ("q:sup", 0)],
    ("cs", "c"): [("a:weighted-sup", 0), ("t:rowvar-sup", 1), ("t:col-exists", 0)],
    ("cs0", "c"): [("a:weighted-sup", 0), ("t:rowvar-sup", 1), ("t:coldiff-exists", 0)],
    ("bs", "c"): [("a:weighted-limit", 0), ("t:row-tails", 0), ("t:col-exists", 0),
                  ("t:rowvar-lim-exists", -1), ("q:limit", 0)],
    ("cs", "c0"): [("a:weighted-sup", 0), ("t:rowvar-sup", 1), ("t:col-zero", 0)],
    ("cs0", "c0"): [("a:weighted-sup", 0), ("t:rowvar-sup", 1), ("t:coldiff-zero", 0)],
    ("bs", "c0"): [("a:weighted-limit", 0), ("t:row-tails", 0), ("t:rowvar-lim-zero", 1), ("q:zero", 0)],
    ("cs", "l1"): [("a:weighted-sup", 0), ("t:rowvar-each", 1), ("t:subset", -1)],
    ("cs0", "l1"): [("a:weighted-sup", 0), ("t:rowvar-each", 1), ("t:subset", 1)],
    ("bs", "l1"): [("a:weighted-limit", 0), ("t:row-tails", 0), ("t:rowvar-each", 1),
                   ("t:subset", 1), ("q:summable", 0)],
    ("cs", "lp"): [("a:weighted-sup", 0), ("t:rowvar-each", 1), ("t:subset-p", -1)],
    ("cs0", "lp"): [("a:weighted-sup", 0), ("t:rowvar-each", 1), ("t:subset-p", 1)],
    ("bs", "lp"): [("a:weighted-limit", 0), ("t:row-tails", 0), ("t:rowvar-each", 1),
                   ("t:subset-p", 1), ("q:p-summable", 0)],
}


def supported_pairs(lambda_domain: bool = False) -> list[tuple[str, str]]:
    return sorted(_LAMBDA if lambda_domain else _CLASSICAL)


def _target_key(tag: SpaceTag) -> tuple[str, float | None]:
    if tag.base == "lp":
        return ("l1", None) if tag.p == 1 else ("lp", tag.p)
    return tag.base, None


def _resolve(source, target, lambda_domain: bool):
    src = source if isinstance(source, SpaceTag) else SpaceTag.parse(source)
    tgt = target if isinstance(target, SpaceTag) else SpaceTag.parse(target)
    if src.is_lambda != lambda_domain or tgt.is_lambda:
        kind = "lambda-domain" if lambda_domain else "classical"
        raise UnsupportedPair(f"({src} : {tgt}) is not a supported {kind} class")
    tkey, p = _target_key(tgt)
    table = _LAMBDA if lambda_domain else _CLASSICAL
    if (src.base, tkey) not in table:
        raise UnsupportedPair(f"no characterization for ({src} : {tgt}); supported: "
                              + ", ".join(f"({s}{'_lambda' if lambda_domain else ''} : {t})"
                                          for s, t in supported_pairs(lambda_domain)))
    return src, tgt, table[(src.base, tkey)], p


def _check_depth(depth: int):
    if depth < 64:
        raise ValueError("depth must be at least 64")


def classical_class_check(A: TriangleMatrix, source, target, depth: int = DEFAULT_CLASS_DEPTH,
                          tol: float = DEFAULT_TOL, subset_depth: int = 10) -> ConditionCertificate:
    """Certificate for ``A`` in ``(source : target)`` with classical spaces."""
    _check_depth(depth)
    src, tgt, plan, p = _resolve(source, target, False)
    blk = _Block(A, depth)
    conds = tuple(_evaluate(kind, blk, tol, subset_depth, shift or 1, p) for kind, shift in plan)
    meta = {"depth": depth, "tolerance": tol, "subset_depth": subset_depth, "matrix": A.metadata()}
    if (src.base, _target_key(tgt)[0]) in CAVEATS:
        meta["caveat"] = CAVEATS[(src.base, _target_key(tgt)[0])]
    return ConditionCertificate(str(src), str(tgt), conds, meta)


def _weighted_block(lam: LambdaWeights, blk: _Block) -> np.ndarray:
    v, g = lam.values(blk.cols), lam.gaps(blk.cols)
    return blk.full[:, : blk.cols] * (v / g)[None, :]


def _row_quantity(lam, blk, reading):
    if reading == "row-sum":
        return blk.full.sum(axis=1)
    if blk.triangular:
        # each row vanishes beyond the diagonal, so the limit along k is zero
        return np.zeros(blk.rows)
    W = _weighted_block(lam, blk)
    return W[:, max(blk.interior - 1, 0)]


def _lambda_condition(tag, shift, lam, blk, tblk, tol, subset_depth, p, reading):
    ns, kind = tag.split(":")
    if ns == "t":
        return _evaluate(kind, tblk, tol, subset_depth, shift or 1, p, m="a~")
    if ns == "a":
        W = _weighted_block(lam, blk)
        if kind == "weighted-sup":
            name, formula = "weighted-row-sup", "sup_k |value(k) a_nk / gap(k)| < inf for every n"
            v = _per_row(blk, W, lambda r: bounded_verdict(r, tol), name, tol)
        else:
            name, formula = "weighted-row-limit-exists", "lim_k |value(k) a_nk / gap(k)| exists for every n"
            v = _per_row(blk, np.abs(W), lambda r: limit_verdict(r, tol), name, tol)
        head = np.max(np.abs(W), axis=1)[:8] if W.size else np.zeros(0)
        v = Verdict(v.conclusion, v.depth, tol, dict(v.evidence, row_sup_head=head.tolist()), name)
        return ConditionResult(name, formula, v)
    q = _row_quantity(lam, blk, reading)
    qdef = ("a_n = lim_k value(k) a_nk / gap(k)" if reading == "row-limit" else "a_n = sum_k a_nk")
    if kind == "sup":
        name, formula = "row-quantity-sup", "sup_n |a_n| < inf"
        v = bounded_verdict(q, tol, subject=name)
    elif kind == "limit":
        name, formula = "row-quantity-limit-exists", "lim_n a_n exists"
        v = limit_verdict(q, tol, subject=name)
    elif kind == "zero":
        name, formula = "row-quantity-limit-zero", "lim_n a_n = 0"
        v = limit_verdict(q, tol, target=0.0, subject=name)
    elif kind == "summable":
        name, formula = "row-quantity-summable", "sum_n |a_n| < inf"
        v = limit_verdict(compensated_cumsum(np.abs(q)), tol, subject=name)
    else:
        name, formula = "row-quantity-p-summable", f"sum_n |a_n|^p < inf, p = {p}"
        v = limit_verdict(compensated_cumsum(np.abs(q) ** p), tol, subject=name)
    v = Verdict(v.conclusion, v.depth, tol, dict(v.evidence, reading=reading, definition=qdef), name)
    return ConditionResult(name, f"{formula} with {qdef}", v)


def _identity_check(lam, A, tblk, depth, tol):
    """Compare ``sum_k a_nk x_k`` with ``sum_k a~_nk y_k`` on a probe ``x``.

    The probe is the preimage of the summable ``y_k = (-1)^k / (k+1)^2``.
    """
    rows = min(depth, 128)
    cols = tblk.cols
    y = LazySequence(block=lambda m: (-1.0) ** np.arange(m) / (np.arange(m) + 1.0) ** 2, label="probe")
    x = inverse_lambda_transform(lam, y).take(cols)
    direct = A.block(rows, cols) @ x
    via = tblk.full[:rows, :cols] @ y.take(cols)
    scale = np.maximum(1.0, np.abs(direct))
    err = float(np.max(np.abs(direct - via) / scale))
    return {"probe_y": "(-1)^k/(k+1)^2", "rows": rows, "max_relative_error": err,
            "within_tolerance": err <= tol}


def lambda_class_check(lam: LambdaWeights, A: TriangleMatrix, source, target,
                       depth: int = DEFAULT_CLASS_DEPTH, tol: float = DEFAULT_TOL,
                       subset_depth: int = 10, row_quantity: str = "row-limit") -> ConditionCertificate:
    """Certificate for ``A`` in ``(source_lambda : target)``.

    ``row_quantity`` selects the reading of the row quantity ``a_n`` used by
    the ``bs_lambda`` classes: ``"row-limit"`` (``lim_k value(k) a_nk/gap(k)``)
    or ``"row-sum"`` (``sum_k a_nk``).
    """
    _check_depth(depth)
    if row_quantity not in ROW_QUANTITY_READINGS:
        raise ValueError(f"row_quantity must be one of {ROW_QUANTITY_READINGS}")
    src, tgt, plan, p = _resolve(source, target, True)
    blk = _Block(A, depth)
    T = a_tilde(lam, A)
    tblk = _Block(T, depth)
    conds = tuple(_lambda_condition(tag, shift, lam, blk, tblk, tol, subset_depth, p, row_quantity)
                  for tag, shift in plan)
    meta = {
        "depth": depth, "tolerance": tol, "subset_depth": subset_depth,
        "weights": lam.descriptor(), "matrix": A.metadata(),
        "normalizations": list(NORMALIZATION_NOTES),
        "tilde_identity": _identity_check(lam, A, tblk, depth, tol),
    }
    if (src.base, _target_key(tgt)[0]) in CAVEATS:
        meta["caveat"] = CAVEATS[(src.base, _target_key(tgt)[0])]
    if any(tag.startswith("q:") for tag, _ in plan):
        meta["row_quantity_reading"] = row_quantity
    return ConditionCertificate(str(src), str(tgt), conds, meta)


def verify_regularity(lam: LambdaWeights, depth: int = DEFAULT_CLASS_DEPTH,
                      tol: float = DEFAULT_TOL) -> ConditionCertificate:
    """Silverman-Toeplitz conditions for the weighted-mean matrix of ``lam``."""
    _check_depth(depth)
    blk = _Block(weighted_mean_matrix(lam), depth)
    M = blk.full[:, : blk.cols]
    abs_sums = np.abs(M).sum(axis=1)
    sums = M.sum(axis=1)
    conds = (
        ConditionResult("row-abs-sums-bounded", "sup_n sum_k |a_nk| < inf",
                        bounded_verdict(abs_sums, tol, subject="row-abs-sums-bounded")),
        ConditionResult("row-sums-to-one", "lim_n sum_k a_nk = 1",
                        limit_verdict(sums, tol, target=1.0, subject="row-sums-to-one")),
        _evaluate("col-zero", blk, tol, 0),
    )
    meta = {"depth": depth, "tolerance": tol, "weights": lam.descriptor(),
            "max_row_sum_deviation": float(np.max(np.abs(sums - 1.0)))}
    return ConditionCertificate("c", "c", conds, meta)
