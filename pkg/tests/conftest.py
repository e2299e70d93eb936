import numpy as np
import pytest

from ellgt.special import EllipticParams


@pytest.fixture(scope="session")
def params():
    return EllipticParams()


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


# fixed generic evaluation points used across the module tests; drawn once
# with the rejection sampler and frozen for reproducibility
W3 = (0.83, 1.71, 0.42)
W4 = (0.83, 1.71, 0.42, 2.23)
LAM2 = (0.37, 0.0)
LAM3 = (0.37, 0.11, 0.0)
