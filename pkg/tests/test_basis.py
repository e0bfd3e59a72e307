import numpy as np
import pytest

from lamspace import LambdaWeights, basis_expansion, basis_vector, gallery, lambda_transform
from lamspace import sequences as seqs

CES = LambdaWeights.cesaro()


def test_cesaro_first_vector():
    assert np.array_equal(basis_vector(CES, 0).sequence.take(4), [1, -1, 0, 0])


def test_support_and_transform(lam):
    for n in (0, 3, 50, 999):
        e = basis_vector(lam, n).sequence.take(1002)
        assert set(np.nonzero(e)[0]) == {n, n + 1}
        y = lambda_transform(lam, basis_vector(lam, n).sequence).take(1002)
        target = np.zeros(1002)
        target[n] = 1.0
        assert np.max(np.abs(y - target)) <= 1e-14


def test_negative_index():
    with pytest.raises(ValueError):
        basis_vector(CES, -1)


def test_finite_expansion_is_exact(lam):
    x = basis_vector(lam, 3).sequence
    for m in (3, 5, 10):
        assert basis_expansion(lam, x, m).residual_norm <= 1e-14


def test_zero_expansion():
    exp = basis_expansion(CES, seqs.zero(), 8)
    assert exp.residual_norm == 0.0
    assert np.array_equal(exp.truncation.take(20), np.zeros(20))


def test_coefficients_are_recovered(rng):
    alpha = rng.normal(size=12)
    x = seqs.zero()
    for n, a in enumerate(alpha):
        x = x + a * basis_vector(CES, n).sequence
    exp = basis_expansion(CES, x, 11)
    assert np.allclose(exp.coefficients, alpha, atol=1e-13)


def test_residuals_decrease_for_witness():
    x = gallery("cs-not-cs0", CES).sequence
    res = [basis_expansion(CES, x, m).residual_norm for m in (8, 16, 32)]
    assert res[0] > res[1] > res[2] > 0
    assert basis_expansion(CES, x, 8).in_space.holds


def test_membership_flag():
    exp = basis_expansion(CES, seqs.constant(1.0), 8)
    assert not exp.in_space.holds
    assert exp.to_dict()["residual_meaningful"] is False
