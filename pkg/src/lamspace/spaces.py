"""Numerical membership tests for classical sequence spaces and their lambda-domains.

A lambda-domain ``X_lambda`` is the set of sequences whose weighted-mean
transform lies in ``X``.  :func:`classify` implements that literally: it
transforms the sequence and classifies the result in the base space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._numerics import compensated_cumsum
from .errors import MissingLambda, UnknownWitness, VacuousPremise
from .sequences import LazySequence, PartialSumSeries, constant, harmonic
from .transform import lambda_transform, s_operator
from .verdict import (
    DEFAULT_DEPTH,
    DEFAULT_TOL,
    Conclusion,
    Verdict,
    bounded_verdict,
    limit_verdict,
)
from .weights import LambdaWeights

__all__ = [
    "SpaceTag",
    "classify",
    "GalleryEntry",
    "gallery",
    "verify_gallery",
    "WITNESS_IDS",
    "inclusion_criterion_check",
]

_BASES = ("c0", "c", "linf", "lp", "cs0", "cs", "bs")
_LAMBDA_BASES = ("c0", "c", "linf", "cs0", "cs", "bs")


@dataclass(frozen=True)
class SpaceTag:
    """A classical space or a lambda-domain over one.

    ``SpaceTag.parse`` accepts ``c0, c, linf, l1, lp(p), cs0, cs, bs`` and the
    ``_lambda`` suffix on ``c0, c, linf, cs0, cs, bs``.
    """

    base: str
    is_lambda: bool = False
    p: float | None = None

    def __post_init__(self):
        if self.base not in _BASES:
            raise ValueError(f"unknown space {self.base!r}")
        if self.base == "lp":
            if self.p is None or not (1 <= self.p < np.inf):
                raise ValueError("lp needs 1 <= p < inf")
            if self.is_lambda:
                raise ValueError("lp has no lambda-domain tag here")
        elif self.p is not None:
            raise ValueError(f"{self.base} takes no exponent")
        if self.is_lambda and self.base not in _LAMBDA_BASES:
            raise ValueError(f"no lambda-domain for {self.base}")

    @classmethod
    def parse(cls, text: str) -> "SpaceTag":
        text = text.strip()
        if text == "l1":
            return cls("lp", p=1.0)
        m = re.fullmatch(r"lp\(([^)]+)\)", text)
        if m:
            return cls("lp", p=float(m.group(1)))
        if text.endswith("_lambda"):
            return cls(text[: -len("_lambda")], is_lambda=True)
        return cls(text)

    @property
    def base_tag(self) -> "SpaceTag":
        return SpaceTag(self.base, False, self.p)

    def lambda_domain(self) -> "SpaceTag":
        return SpaceTag(self.base, True, self.p)

    def __str__(self) -> str:
        if self.base == "lp":
            return "l1" if self.p == 1 else f"lp({self.p:g})"
        return self.base + ("_lambda" if self.is_lambda else "")


def _as_tag(space) -> SpaceTag:
    return space if isinstance(space, SpaceTag) else SpaceTag.parse(space)


def classify(x: LazySequence, space, lam: LambdaWeights | None = None,
             depth: int = DEFAULT_DEPTH, tol: float = DEFAULT_TOL) -> Verdict:
    """Classify ``x`` in ``space`` from its first ``depth`` terms."""
    tag = _as_tag(space)
    if depth < 16:
        raise ValueError("depth must be at least 16")
    if tag.is_lambda:
        if lam is None:
            raise MissingLambda(f"{tag} needs weights")
        verdict = classify(lambda_transform(lam, x), tag.base_tag, None, depth, tol)
        evidence = dict(verdict.evidence, via="lambda_transform", weights=lam.describe())
        return Verdict(verdict.conclusion, verdict.depth, tol, evidence, f"{x.label} in {tag}")
    if lam is not None:
        raise ValueError(f"{tag} is not a lambda-domain; weights must not be given")

    subject = f"{x.label} in {tag}"
    b = tag.base
    if b in ("cs", "cs0", "bs"):
        sums = PartialSumSeries(x).take(depth)
        if b == "bs":
            return bounded_verdict(sums, tol, subject=subject)
        return limit_verdict(sums, tol, target=0.0 if b == "cs0" else None, subject=subject)
    terms = x.take(depth)
    if b == "linf":
        return bounded_verdict(terms, tol, subject=subject)
    if b in ("c", "c0"):
        return limit_verdict(terms, tol, target=0.0 if b == "c0" else None, subject=subject)
    # lp: the series of |x_k|^p must converge
    return limit_verdict(compensated_cumsum(np.abs(terms) ** tag.p), tol, subject=subject)


# gallery of witness sequences ------------------------------------------------

WITNESS_IDS = ("cs-not-cs0", "bs-not-cs", "c0lam-not-cslam", "linflam-not-bslam")


@dataclass(frozen=True)
class GalleryEntry:
    """A witness sequence with its closed-form transform and claimed memberships."""

    name: str
    sequence: LazySequence
    claims: tuple[tuple[SpaceTag, Conclusion], ...]
    closed_form: str
    transform_form: str
    # expected transform values and the relation they satisfy ("eq" or "ge")
    transform_expected: Callable[[np.ndarray], np.ndarray]
    relation: str


def _shifted(v: np.ndarray) -> np.ndarray:
    return np.concatenate(([0.0], v[:-1]))


def gallery(name: str, lam: LambdaWeights) -> GalleryEntry:
    """Witness sequences separating the lambda series spaces."""
    T = SpaceTag.parse
    H, F = Conclusion.HOLDS, Conclusion.FAILS
    if name == "cs-not-cs0":
        def block(m):
            v, g, k = lam.values(m), lam.gaps(m), np.arange(m, dtype=float)
            return (v / (k + 2) ** 2 - _shifted(v) / (k + 1) ** 2) / g

        return GalleryEntry(
            name, LazySequence(block=block, label="(l_k/(k+2)^2 - l_{k-1}/(k+1)^2)/(l_k - l_{k-1})"),
            ((T("cs_lambda"), H), (T("cs0_lambda"), F)),
            "x_k = (lambda_k/(k+2)^2 - lambda_{k-1}/(k+1)^2) / (lambda_k - lambda_{k-1})",
            "Lambda_n(x) = 1/(n+2)^2",
            lambda n: 1.0 / (n + 2.0) ** 2, "eq")
    if name == "bs-not-cs":
        def block(m):
            v, g = lam.values(m), lam.gaps(m)
            sign = np.where(np.arange(m) % 2 == 0, 1.0, -1.0)
            return sign * (v + _shifted(v)) / g

        return GalleryEntry(
            name, LazySequence(block=block, label="(-1)^k (l_k + l_{k-1})/(l_k - l_{k-1})"),
            ((T("bs_lambda"), H), (T("cs_lambda"), F)),
            "y_k = (-1)^k (lambda_k + lambda_{k-1}) / (lambda_k - lambda_{k-1})",
            "Lambda_n(y) = (-1)^n, partial sums 1, 0, 1, 0, ...",
            lambda n: np.where(n % 2 == 0, 1.0, -1.0), "eq")
    if name == "c0lam-not-cslam":
        return GalleryEntry(
            name, harmonic(),
            ((T("c0_lambda"), H), (T("cs_lambda"), F)),
            "x_k = 1/(k+1)",
            "Lambda_n(x) >= 1/(n+1)",
            lambda n: 1.0 / (n + 1.0), "ge")
    if name == "linflam-not-bslam":
        return GalleryEntry(
            name, constant(1.0),
            ((T("linf_lambda"), H), (T("bs_lambda"), F)),
            "e = (1, 1, 1, ...)",
            "Lambda_n(e) = 1",
            lambda n: np.ones_like(n, dtype=float), "eq")
    raise UnknownWitness(f"unknown witness {name!r}; expected one of {WITNESS_IDS}")


def verify_gallery(entry: GalleryEntry, lam: LambdaWeights, depth: int = 1024,
                   tol: float = DEFAULT_TOL, closed_form_tol: float = 1e-12) -> dict:
    """Check the closed-form transform and every claimed membership.

    Returns a report dict with ``ok`` true when the transform matches to
    ``closed_form_tol`` and every claim's verdict equals its expectation.
    """
    n = np.arange(depth + 1, dtype=float)
    got = lambda_transform(lam, entry.sequence).take(depth + 1)
    want = entry.transform_expected(n)
    if entry.relation == "eq":
        err = float(np.max(np.abs(got - want)))
        transform_ok = err <= closed_form_tol
    else:
        err = float(max(0.0, np.max(want - got)))
        transform_ok = err <= closed_form_tol
    claims = []
    for tag, expected in entry.claims:
        v = classify(entry.sequence, tag, lam, depth=max(depth, 16), tol=tol)
        claims.append({"space": str(tag), "expected": expected.value,
                       "verdict": v.to_dict(), "matches": v.conclusion is expected})
    return {
        "witness": entry.name,
        "weights": lam.descriptor(),
        "closed_form": entry.closed_form,
        "transform_claim": entry.transform_form,
        "transform_relation": entry.relation,
        "transform_max_violation": err,
        "transform_tolerance": closed_form_tol,
        "transform_ok": transform_ok,
        "claims": claims,
        "ok": transform_ok and all(c["matches"] for c in claims),
    }


# inclusion criterion ----------------------------------------------------------

def inclusion_criterion_check(x: LazySequence, lam: LambdaWeights, target, depth: int = DEFAULT_DEPTH,
                              tol: float = DEFAULT_TOL) -> Verdict:
    """Evidence for ``X_lambda subset X`` on a single sequence via the S-operator.

    ``x`` must be (numerically) in the lambda-domain of ``target``.  The
    conclusion is the verdict for ``S(x)`` in ``target``; the evidence also
    carries the verdict for ``x`` itself and the partial-sum identity
    ``sum S_n = sum x_n - sum Lambda_n`` checked to ``tol``.
    """
    tag = _as_tag(target)
    if tag.base not in ("cs", "cs0", "bs") or tag.is_lambda:
        raise ValueError("target must be cs, cs0 or bs")
    premise = classify(x, tag.lambda_domain(), lam, depth, tol)
    if not premise.holds:
        raise VacuousPremise(f"{x.label} is not numerically in {tag.lambda_domain()} "
                             f"({premise.conclusion.value}); the criterion says nothing")
    s = s_operator(lam, x)
    s_verdict = classify(s, tag, None, depth, tol)
    x_verdict = classify(x, tag, None, depth, tol)
    lhs = PartialSumSeries(s).take(depth)
    rhs = PartialSumSeries(x).take(depth) - PartialSumSeries(lambda_transform(lam, x)).take(depth)
    identity_err = float(np.max(np.abs(lhs - rhs)))
    evidence = {
        "premise": premise.to_dict(),
        "s_verdict": s_verdict.to_dict(),
        "x_verdict": x_verdict.to_dict(),
        "verdicts_agree": s_verdict.conclusion is x_verdict.conclusion,
        "partial_sum_identity_max_error": identity_err,
        "partial_sum_identity_holds": identity_err <= tol,
    }
    return Verdict(s_verdict.conclusion, depth, tol, evidence, f"S({x.label}) in {tag}")
