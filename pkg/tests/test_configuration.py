from __future__ import annotations

import importlib

import pytest

from kahlerbochner.configuration import (
    Config,
    config_to_dict,
    get_config,
    get_operator_schema,
    get_tolerances,
    tolerance,
)


def test_Config():
    cfg = Config()
    assert cfg.seed == 42
    assert cfg.trials == 50
    assert cfg.n_max == 4
    assert cfg.kappa is None
    assert cfg.diameter is None
    assert cfg.output_dir is None


def test_Config_estimate():
    cfg = Config(1, 10, kappa=-1, diameter=2)
    assert cfg.kappa == -1.0
    assert cfg.diameter == 2.0


def test_Config_creates_output_dir(tmp_path):
    output_dir = tmp_path / "reports"
    cfg = Config(output_dir=str(output_dir))
    assert cfg.output_dir == output_dir
    assert output_dir.is_dir()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kappa": 0.5},
        {"kappa": -1, "diameter": 0},
        {"diameter": 1.0},
        {"n_max": 7},
        {"n_max": 0},
        {"tol": 0},
    ],
)
def test_Config_errors(kwargs):
    with pytest.raises(ValueError):
        Config(**kwargs)


def test_Config_trials_error():
    with pytest.raises(ValueError):
        Config(0, 0)


def test_config_to_dict_smoke(tmp_path):
    cfg = Config(output_dir=tmp_path)
    cfg_dict = config_to_dict(cfg)
    assert cfg_dict["output_dir"] == str(tmp_path)
    assert cfg_dict["seed"] == 42


def test_get_config_error():
    with pytest.raises(FileNotFoundError):
        get_config("", "foo.json")


def test_get_tolerances():
    tolerances = get_tolerances()
    assert tolerances["boundary"] == 1e-12
    assert tolerances["identity_rel"] == 1e-9
    assert tolerance("torus_separation") == 1e-3


def test_get_operator_schema_smoke():
    schema = get_operator_schema()
    assert schema["properties"]["format"]["const"] == "kco-v1"


def test_Config_resolve_boundary():
    assert not Config().resolve_boundary
    assert Config(resolve_boundary=True).resolve_boundary


@pytest.mark.parametrize(
    "module, attribute, key",
    [
        ("curvature", "CONSTRUCTION_TOL", "construction"),
        ("curvature", "BIANCHI_TOL", "bianchi"),
        ("curvature", "BACKWARD_ERROR_TOL", "eigensolver_backward"),
        ("bochner", "BOUNDARY_TOL", "boundary"),
        ("complex_exterior", "RANK_THRESHOLD", "projector_rank"),
        ("unitary_lie", "UNITARY_TOL", "construction"),
    ],
)
def test_module_tolerances_come_from_config(module, attribute, key):
    imported = importlib.import_module(f"kahlerbochner.{module}")
    assert getattr(imported, attribute) == get_tolerances()[key]
