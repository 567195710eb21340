import random

import pytest

from symcube.registry import load_profile


@pytest.fixture(scope="session")
def reg():
    return load_profile("theoremA")


@pytest.fixture()
def rng():
    return random.Random(20260826)
