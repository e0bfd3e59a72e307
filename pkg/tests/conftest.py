import numpy as np
import pytest
from hypothesis import settings

from lamspace import LambdaWeights, builtin_families

settings.register_profile("lamspace", deadline=None, derandomize=True, max_examples=40)
settings.load_profile("lamspace")

# the three families used for the closed-form checks
CORE = [LambdaWeights.cesaro(), LambdaWeights.power(2.0), LambdaWeights.geometric(2.0)]


@pytest.fixture(params=builtin_families(), ids=lambda lam: lam.describe())
def lam(request):
    return request.param


@pytest.fixture(params=CORE, ids=lambda lam: lam.describe())
def core_lam(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20260415)
