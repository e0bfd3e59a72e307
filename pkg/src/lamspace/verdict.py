"""Three-valued verdicts about asymptotic properties from finite data.

Two primitive tests back every membership and class condition:

* :func:`limit_verdict` decides whether a sequence (terms, partial sums, row
  quantities) has a limit.  It first applies a Cauchy window over the last
  quarter of the data.  When the window is not flat within ``tol`` it looks at
  the oscillation over dyadic windows ``[D/2, D], [D/4, D/2], ...``: a
  consistent geometric decay of those oscillations is extrapolated to a tail
  bound (``Holds``, method ``extrapolated``); persistent non-decaying
  oscillation is a Cauchy violation (``Fails``, with the offending index
  pair); anything else is ``Inconclusive``.
* :func:`bounded_verdict` classifies the running maximum of ``|values|`` with
  the log-log trend rule of :func:`lamspace.transform.classify_trend`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._numerics import dyadic_windows, running_max
from .transform import classify_trend

__all__ = [
    "Conclusion",
    "Verdict",
    "conjunction",
    "limit_verdict",
    "bounded_verdict",
    "finite_verdict",
    "DEFAULT_DEPTH",
    "DEFAULT_TOL",
]

DEFAULT_DEPTH = 4096
DEFAULT_TOL = 1e-8

# per dyadic step, oscillation must shrink at least like D**-0.25 to extrapolate
CONVERGENT_RATIO = 2.0**-0.25
# and a fitted ratio above D**-0.1 with persistent oscillation counts as divergence
DIVERGENT_RATIO = 2.0**-0.1
TAIL_SAFETY = 2.0


class Conclusion(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Verdict):
        return obj.to_dict()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        if np.isfinite(f):
            return f
        return "nan" if np.isnan(f) else ("inf" if f > 0 else "-inf")
    if isinstance(obj, (np.complexfloating, complex)):
        return {"re": _jsonable(obj.real), "im": _jsonable(obj.imag)}
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


@dataclass(frozen=True)
class Verdict:
    """Conclusion about a property, with the finite evidence it rests on.

    ``Holds`` for a limit property means the finite-depth Cauchy test (or its
    dyadic extrapolation) passed; it is evidence at ``depth``, not a proof.
    """

    conclusion: Conclusion
    depth: int
    tolerance: float
    evidence: dict = field(default_factory=dict)
    subject: str = ""

    @property
    def holds(self) -> bool:
        return self.conclusion is Conclusion.HOLDS

    @property
    def fails(self) -> bool:
        return self.conclusion is Conclusion.FAILS

    def with_subject(self, subject: str) -> "Verdict":
        return Verdict(self.conclusion, self.depth, self.tolerance, self.evidence, subject)

    def to_dict(self) -> dict:
        return _jsonable({
            "subject": self.subject,
            "conclusion": self.conclusion.value,
            "depth": self.depth,
            "tolerance": self.tolerance,
            "finite_depth_evidence": True,
            "evidence": self.evidence,
        })


def combine_conclusions(conclusions: Iterable[Conclusion]) -> Conclusion:
    """Fails dominates, then Inconclusive; Holds only if every part Holds."""
    conclusions = list(conclusions)
    if any(c is Conclusion.FAILS for c in conclusions):
        return Conclusion.FAILS
    if any(c is Conclusion.INCONCLUSIVE for c in conclusions):
        return Conclusion.INCONCLUSIVE
    return Conclusion.HOLDS


def conjunction(verdicts: Iterable[Verdict], subject: str = "", depth: int | None = None,
                tol: float | None = None) -> Verdict:
    verdicts = list(verdicts)
    conclusion = combine_conclusions(v.conclusion for v in verdicts)
    if depth is None:
        depth = min((v.depth for v in verdicts), default=0)
    if tol is None:
        tol = max((v.tolerance for v in verdicts), default=0.0)
    return Verdict(conclusion, depth, tol, {"parts": [v.to_dict() for v in verdicts]}, subject)


def finite_verdict(value: float, depth: int, tol: float, subject: str = "", **evidence) -> Verdict:
    """A quantity computed exactly from finitely many terms (always finite)."""
    return Verdict(Conclusion.HOLDS if np.isfinite(value) else Conclusion.FAILS, depth, tol,
                   {"method": "finite", "value": value, **evidence}, subject)


def limit_verdict(values, tol: float = DEFAULT_TOL, *, target: float | None = None,
                  subject: str = "") -> Verdict:
    """Does the sequence ``values`` converge (to ``target``, if given)?"""
    s = np.asarray(values)
    if np.iscomplexobj(s):
        re = limit_verdict(s.real, tol, target=None if target is None else float(np.real(target)), subject=subject)
        im = limit_verdict(s.imag, tol, target=None if target is None else float(np.imag(target)), subject=subject)
        return conjunction([re, im], subject)
    D = len(s)
    if D < 4:
        return Verdict(Conclusion.INCONCLUSIVE, D, tol, {"reason": "fewer than 4 values"}, subject)
    if not np.all(np.isfinite(s)):
        bad = int(np.argmin(np.isfinite(s)))
        return Verdict(Conclusion.FAILS, D, tol, {"method": "overflow", "witness_index": bad}, subject)

    quarter = s[(3 * D) // 4:]
    window_osc = float(np.ptp(quarter))
    evidence: dict = {"last_quarter_oscillation": window_osc, "last_value": float(s[-1])}
    exists = None
    if window_osc <= tol:
        exists = True
        evidence["method"] = "cauchy-window"
        uncertainty = window_osc
    else:
        windows = dyadic_windows(D)
        osc = np.array([np.ptp(s[a:b + 1]) for a, b in windows])
        evidence["dyadic_windows"] = [list(w) for w in windows]
        evidence["dyadic_oscillation"] = osc.tolist()
        with np.errstate(divide="ignore", invalid="ignore"):
            ratios = osc[:-1] / osc[1:] if len(osc) > 1 else np.array([])
        with np.errstate(divide="ignore", invalid="ignore"):
            fitted = float((osc[0] / osc[-1]) ** (1.0 / (len(osc) - 1))) if len(osc) > 1 and osc[-1] > 0 else float("inf")
        evidence["fitted_ratio"] = fitted
        if len(ratios) and np.all(np.isfinite(ratios)) and np.all(ratios <= CONVERGENT_RATIO):
            exists = True
            # the slowest observed decay bounds the geometric tail
            worst = float(np.max(ratios))
            uncertainty = TAIL_SAFETY * float(osc[0]) * worst / (1.0 - worst)
            evidence["method"] = "extrapolated"
            evidence["tail_bound"] = uncertainty
        elif fitted >= DIVERGENT_RATIO and np.all(osc > tol):
            a, b = windows[0]
            seg = s[a:b + 1]
            i, j = a + int(np.argmin(seg)), a + int(np.argmax(seg))
            evidence.update(method="persistent-oscillation",
                            witness=[min(i, j), max(i, j)],
                            witness_gap=float(abs(s[j] - s[i])))
            return Verdict(Conclusion.FAILS, D, tol, evidence, subject)
        else:
            evidence["method"] = "undecided"
            return Verdict(Conclusion.INCONCLUSIVE, D, tol, evidence, subject)

    evidence["limit_estimate"] = float(s[-1])
    evidence["limit_uncertainty"] = uncertainty
    if target is None:
        return Verdict(Conclusion.HOLDS, D, tol, evidence, subject)
    distance = abs(float(s[-1]) - target)
    evidence["target"] = target
    evidence["distance_to_target"] = distance
    if distance <= uncertainty + tol:
        return Verdict(Conclusion.HOLDS, D, tol, evidence, subject)
    return Verdict(Conclusion.FAILS, D, tol, evidence, subject)


def bounded_verdict(values, tol: float = DEFAULT_TOL, *, bound: float | None = None,
                    subject: str = "") -> Verdict:
    """Is ``|values|`` bounded?  Optionally by an explicit ``bound``."""
    s = np.abs(np.asarray(values))
    D = len(s)
    if D == 0:
        return Verdict(Conclusion.INCONCLUSIVE, 0, tol, {"reason": "no values"}, subject)
    if not np.all(np.isfinite(s)):
        bad = int(np.argmin(np.isfinite(s)))
        return Verdict(Conclusion.FAILS, D, tol, {"method": "overflow", "witness_index": bad}, subject)
    if bound is not None:
        over = np.nonzero(s > bound + tol)[0]
        if over.size:
            k = int(over[0])
            return Verdict(Conclusion.FAILS, D, tol,
                           {"method": "explicit-bound", "bound": bound, "witness_index": k,
                            "witness_value": float(s[k])}, subject)
    run = running_max(s)
    trend, slope = classify_trend(run, tol)
    evidence = {"method": "running-max-trend", "sup": float(run[-1]), "argmax": int(np.argmax(s)),
                "trend": trend, "slope": slope}
    if trend == "growing":
        evidence["witness_index"] = int(np.argmax(s))
        return Verdict(Conclusion.FAILS, D, tol, evidence, subject)
    if trend == "bounded-looking":
        return Verdict(Conclusion.HOLDS, D, tol, evidence, subject)
    return Verdict(Conclusion.INCONCLUSIVE, D, tol, evidence, subject)
