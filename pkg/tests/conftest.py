"""
Shared fixtures for the karyx test suite.
"""
from pathlib import Path

import numpy as np
import pytest

from karyx.models.lattice import LatticeShape
from karyx.services.game_builder import dirac, random_game, unanimity

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES


@pytest.fixture
def shape_32() -> LatticeShape:
    return LatticeShape(3, 2)


@pytest.fixture
def dirac_211(shape_32):
    """delta_(2,1,1): the game where only the first attribute should matter"""
    return dirac(shape_32, (2, 1, 1))


@pytest.fixture
def unanimity_210(shape_32):
    return unanimity(shape_32, (2, 1, 0))


@pytest.fixture
def random_corpus():
    """200 seeded non-monotone games for a given shape"""

    def build(shape: LatticeShape, count: int = 200, seed: int = 2024):
        return [random_game(shape, np.random.default_rng([seed, t])) for t in range(count)]

    return build
