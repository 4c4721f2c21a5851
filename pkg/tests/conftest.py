import random

import pytest

from qmeasure.space import OutcomeSpace


@pytest.fixture
def rng() -> random.Random:
    """Fresh deterministic generator per test."""
    return random.Random("qmeasure-tests")


@pytest.fixture(params=[2, 3, 4])
def small_space(request) -> OutcomeSpace:
    return OutcomeSpace(request.param)
