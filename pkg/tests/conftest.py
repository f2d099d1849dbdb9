from __future__ import annotations

import shutil
from pathlib import Path

import numpy as np
import pytest

from kahlerbochner.curvature import (
    model_cpn,
    model_n2_einstein_family,
    model_n2_optimality,
)


@pytest.fixture
def data_dir():
    return Path(__file__).parent.parent / "kahlerbochner" / "fixtures"


@pytest.fixture
def output_dir(tmp_path, data_dir) -> Path:
    target_dir = tmp_path / "operators"
    target_dir.mkdir()
    shutil.copytree(data_dir, target_dir, dirs_exist_ok=True)
    return target_dir


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def cp2():
    return model_cpn(2)


@pytest.fixture
def einstein_family():
    return model_n2_einstein_family(1.0)


@pytest.fixture
def optimality_example():
    return model_n2_optimality()
