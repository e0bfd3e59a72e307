import numpy as np
import pytest
from hypothesis import given, strategies as st

from lamspace import (
    LambdaWeights,
    bs_lambda_norm,
    inverse_lambda_transform,
    lambda_matrix_entry,
    lambda_transform,
    s_operator,
    series_norm,
)
from lamspace import sequences as seqs
from lamspace.transform import lambda_matrix_block

CES = LambdaWeights.cesaro()


def test_matrix_entries():
    assert lambda_matrix_entry(CES, 2, 1) == pytest.approx(1 / 3)
    assert lambda_matrix_entry(CES, 0, 0) == 1.0
    assert lambda_matrix_entry(CES, 1, 2) == 0.0


def test_transform_matches_dense_matrix(lam, rng):
    x = seqs.from_list(rng.normal(size=200), "zero")
    dense = lambda_matrix_block(lam, 200, 200) @ x.take(200)
    assert np.allclose(lambda_transform(lam, x).take(200), dense, rtol=1e-12, atol=1e-14)


def test_transform_of_unit():
    y = lambda_transform(CES, seqs.unit(0)).take(50)
    assert np.allclose(y, 1 / np.arange(1, 51))


def test_transform_of_e(lam):
    assert np.allclose(lambda_transform(lam, seqs.constant(1.0)).take(500), 1.0, rtol=0, atol=1e-14)


def test_inverse_examples(lam):
    assert np.allclose(inverse_lambda_transform(lam, seqs.constant(1.0)).take(300), 1.0, atol=1e-12)
    assert np.allclose(inverse_lambda_transform(CES, seqs.unit(0)).take(4), [1, -1, 0, 0])


def test_s_operator_examples(lam, rng):
    x = seqs.from_list(rng.normal(size=100), "zero")
    assert s_operator(lam, x)[0] == 0.0
    assert np.allclose(s_operator(lam, seqs.constant(1.0)).take(200), 0.0, atol=1e-12)


def test_s_operator_decomposition_cesaro():
    x = seqs.LazySequence(block=lambda m: np.arange(m, dtype=float))
    s = s_operator(CES, x).take(1001)
    direct = x.take(1001) - lambda_transform(CES, x).take(1001)
    assert np.max(np.abs(s - direct)) <= 1e-12 * 1000


def test_norms():
    r = bs_lambda_norm(CES, seqs.zero(), 100)
    assert r.value == 0 and r.trend == "bounded-looking"
    r = bs_lambda_norm(CES, seqs.constant(1.0), 200)
    assert r.value == 201 and r.trend == "growing"
    assert series_norm(seqs.alternating(), 50).value == 1.0
    with pytest.raises(ValueError):
        bs_lambda_norm(CES, seqs.zero(), 0)


@given(st.integers(0, 5), st.lists(st.floats(-100, 100), min_size=1, max_size=60),
       st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(fam, values, a, b):
    from lamspace import builtin_families

    lam = builtin_families()[fam]
    x = seqs.from_list(values, "zero")
    y = seqs.from_list(values[::-1], "zero")
    lhs = lambda_transform(lam, a * x + b * y).take(len(values) + 3)
    rhs = a * lambda_transform(lam, x).take(len(values) + 3) + b * lambda_transform(lam, y).take(len(values) + 3)
    assert np.allclose(lhs, rhs, atol=1e-9)


@given(st.integers(0, 5), st.lists(st.floats(-100, 100), min_size=1, max_size=80))
def test_round_trip(fam, values):
    from lamspace import builtin_families

    lam = builtin_families()[fam]
    x = seqs.from_list(values, "zero")
    back = inverse_lambda_transform(lam, lambda_transform(lam, x)).take(len(values))
    scale = max(1.0, max(abs(v) for v in values))
    assert np.allclose(back, values, atol=1e-10 * scale)
