import random

import pytest

from diskew import load_preset


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def weyl_q():
    return load_preset("weyl-q")


@pytest.fixture
def usl2_dpr():
    return load_preset("usl2-dpr")


@pytest.fixture
def usl2_gwa():
    return load_preset("usl2-gwa")


@pytest.fixture
def quantum_plane():
    return load_preset("quantum-plane-gwa")


@pytest.fixture
def rank2_weyl():
    return load_preset("rank2-weyl")
