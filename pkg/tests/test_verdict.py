import json

import numpy as np

from lamspace.verdict import (
    Conclusion,
    Verdict,
    bounded_verdict,
    combine_conclusions,
    conjunction,
    limit_verdict,
)

H, F, I = Conclusion.HOLDS, Conclusion.FAILS, Conclusion.INCONCLUSIVE


def test_constant_sequence_has_limit():
    v = limit_verdict(np.full(100, 3.0))
    assert v.holds and v.evidence["method"] == "cauchy-window"


def test_geometrically_converging_tail_is_extrapolated():
    n = np.arange(1, 4097, dtype=float)
    v = limit_verdict(np.cumsum(1 / n**2))
    assert v.holds and v.evidence["method"] == "extrapolated"
    assert abs(v.evidence["limit_estimate"] - np.pi**2 / 6) <= v.evidence["limit_uncertainty"]


def test_target_distance():
    n = np.arange(1, 4097, dtype=float)
    assert limit_verdict(1 / n, target=0.0).holds
    assert limit_verdict(1 + 1 / n, target=0.0).fails


def test_divergent_log_fails_with_witness():
    v = limit_verdict(np.cumsum(1 / np.arange(1, 4097)))
    assert v.fails
    i, j = v.evidence["witness"]
    assert i < j


def test_oscillation_fails():
    v = limit_verdict(np.where(np.arange(1000) % 2 == 0, 1.0, 0.0))
    assert v.fails


def test_overflow_fails():
    assert limit_verdict(np.array([1.0, 2.0, np.inf, 1.0, 1.0])).fails


def test_bounded():
    assert bounded_verdict(np.sin(np.arange(2000))).holds
    assert bounded_verdict(np.arange(2000.0)).fails
    assert bounded_verdict(np.zeros(10)).holds
    v = bounded_verdict(np.array([0.5, 2.0]), bound=1.0)
    assert v.fails and v.evidence["witness_index"] == 1


def test_combination():
    assert combine_conclusions([H, H]) is H
    assert combine_conclusions([H, I]) is I
    assert combine_conclusions([I, F, H]) is F
    c = conjunction([Verdict(H, 10, 1e-8), Verdict(I, 20, 1e-8)], "both")
    assert c.conclusion is I and c.depth == 10


def test_to_dict_is_json_safe():
    v = Verdict(H, 5, 1e-8, {"x": np.float64(np.nan), "y": np.int64(3), "z": float("inf")})
    d = v.to_dict()
    json.dumps(d, allow_nan=False)
    assert d["finite_depth_evidence"] is True
    assert d["evidence"]["x"] == "nan" and d["evidence"]["y"] == 3
