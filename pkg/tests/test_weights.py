import numpy as np
import pytest

from lamspace import GapTooSmall, InvalidWeights, LambdaWeights, LazySequence, builtin_families


def test_cesaro():
    lam = LambdaWeights.cesaro()
    assert np.array_equal(lam.values(4), [1, 2, 3, 4])
    assert np.array_equal(lam.gaps(4), [1, 1, 1, 1])
    assert lam.value(-1) == 0 and lam.gap(-1) == 0


def test_gaps_are_differences(lam):
    v, g = lam.values(300), lam.gaps(300)
    assert g[0] == v[0]
    assert np.allclose(g[1:], np.diff(v), rtol=1e-12)


def test_power_gaps_are_accurate():
    lam = LambdaWeights.power(0.5)
    k = np.arange(1, 1000, dtype=float)
    naive = np.sqrt(k + 1) - np.sqrt(k)
    assert np.allclose(lam.gaps(1000)[1:], naive, rtol=1e-12)


def test_riesz_gaps_are_q_exactly():
    q = LazySequence(block=lambda m: 1.0 + (np.arange(m) % 3))
    lam = LambdaWeights.riesz(q)
    assert np.array_equal(lam.gaps(9), q.take(9))
    assert np.array_equal(lam.values(4), [1, 3, 6, 7])


def test_custom_tails():
    assert np.array_equal(LambdaWeights.custom([1, 3, 4, 8], "arithmetic").values(6), [1, 3, 4, 8, 12, 16])
    assert np.array_equal(LambdaWeights.custom([1, 2], "geometric").values(4), [1, 2, 4, 8])


@pytest.mark.parametrize("values,tail", [([1, 1, 2], "arithmetic"), ([0, 1], "arithmetic"),
                                         ([1, 2], "zero"), ([], "arithmetic")])
def test_custom_rejects(values, tail):
    with pytest.raises(InvalidWeights):
        LambdaWeights.custom(values, tail)


@pytest.mark.parametrize("make", [lambda: LambdaWeights.power(0), lambda: LambdaWeights.geometric(1)])
def test_family_parameter_checks(make):
    with pytest.raises(InvalidWeights):
        make()


def test_non_increasing_rule_rejected():
    lam = LambdaWeights.from_rule(lambda k: 5 - k, "5-k")
    with pytest.raises(InvalidWeights):
        lam.values(3)


def test_geometric_overflow_is_reported():
    with pytest.raises(InvalidWeights):
        LambdaWeights.geometric(2.0).values(1100)


def test_gap_floor():
    lam = LambdaWeights.custom([1.0, 1.0 + 1e-14], "arithmetic")
    with pytest.raises(GapTooSmall) as err:
        lam.check_gaps(3)
    assert err.value.k == 1


def test_builtins_usable_to_depth_1000():
    for lam in builtin_families():
        lam.check_gaps(1001)
        assert lam.descriptor()["family"] == lam.family
