"""
测试公共 fixture
"""
import numpy as np
import pytest

from src.core.factory import WitnessFactory


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def factory():
    return WitnessFactory()
