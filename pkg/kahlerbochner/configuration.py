from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any

from attrs import asdict, define, field

from kahlerbochner.defaults import (
    default_nmax,
    default_seed,
    default_trials,
    max_dimension,
)
from kahlerbochner.logger import kahlerbochner_log

log = kahlerbochner_log(name="kahlerbochner")


def _optional_path(value: str | Path | None) -> Path | None:
    return None if value is None else Path(value)


def _optional_float(value: Any) -> float | None:
    return None if value is None else float(value)


@define
class Config:
    """Settings shared by the commands of a single run.

    :raises ValueError: when kappa is positive, the diameter is not positive,
                        a diameter is given without kappa,
                        or the dimension / trial counts are out of range.
    """

    seed: int = field(default=default_seed(), converter=int)
    trials: int = field(default=default_trials(), converter=int)

    @trials.validator
    def _check_trials(self, attribute: str, value: int) -> None:
        if value < 1:
            raise ValueError(f"trials must be at least 1, got {value}.")

    tol: float = field(kw_only=True, default=1e-9, converter=float)

    @tol.validator
    def _check_tol(self, attribute: str, value: float) -> None:
        if value <= 0:
            raise ValueError(f"tol must be positive, got {value}.")

    kappa: float | None = field(kw_only=True, default=None, converter=_optional_float)

    @kappa.validator
    def _check_kappa(self, attribute: str, value: float | None) -> None:
        if value is not None and value > 0:
            raise ValueError(f"kappa must be non-positive, got {value}.")

    diameter: float | None = field(
        kw_only=True, default=None, converter=_optional_float
    )

    @diameter.validator
    def _check_diameter(self, attribute: str, value: float | None) -> None:
        if value is None:
            return
        if value <= 0:
            raise ValueError(f"diameter must be positive, got {value}.")
        if self.kappa is None:
            raise ValueError("A diameter was given without a curvature level kappa.")

    n_max: int = field(kw_only=True, default=default_nmax(), converter=int)

    @n_max.validator
    def _check_n_max(self, attribute: str, value: int) -> None:
        if not 1 <= value <= max_dimension():
            raise ValueError(f"n_max must be between 1 and {max_dimension()}.")

    resolve_boundary: bool = field(kw_only=True, default=False, converter=bool)

    output_dir: Path | None = field(
        kw_only=True, default=None, converter=_optional_path
    )

    def __attrs_post_init__(self) -> None:
        """Create output_dir if it does not exist."""
        if self.output_dir is not None and not self.output_dir.exists():
            log.debug(f"Creating dir: {self.output_dir}")
            self.output_dir.mkdir(parents=True, exist_ok=True)


def config_to_dict(cfg: Config) -> dict[str, Any]:
    """Convert a config to a dictionary.

    :param cfg:
    :type  cfg: Config

    :return:
    :rtype: dict
    """
    dict_cfg = asdict(cfg)
    for key, value in dict_cfg.items():
        if isinstance(value, Path):
            dict_cfg[key] = str(value)
    return dict_cfg


def get_config(config_file: Path | None = None, default: str = "") -> dict[str, Any]:
    """Load a config stored in a JSON.

    :param config_file: File to load. Defaults to None.
                        Will look into the config directory if None.
    :type config_file: Path, optional

    :param default: Default file to load. Defaults to ""
    :type default: str, optional

    :raises FileNotFoundError: when neither file exists

    :return: Config as a dictionary.
    :rtype: dict
    """
    if config_file is None or not Path(config_file).exists():
        my_path = Path(__file__).absolute().parent / "config"
        config_file = my_path / default

    if not Path(config_file).exists():
        raise FileNotFoundError(f"Config file {config_file} not found")

    with open(config_file) as ff:
        return json.load(ff)


@lru_cache(maxsize=1)
def _default_tolerances() -> tuple[tuple[str, float], ...]:
    return tuple(sorted(get_config(None, "tolerances.json").items()))


def get_tolerances(config_file: Path | None = None) -> dict[str, float]:
    """Load the tolerance table.

    >>> get_tolerances()["boundary"]
    1e-12
    """
    if config_file is None:
        return dict(_default_tolerances())
    return get_config(config_file, "tolerances.json")


def tolerance(name: str) -> float:
    return float(dict(_default_tolerances())[name])


def get_operator_schema(config_file: Path | None = None) -> dict[str, Any]:
    """Load the JSON schema of kco-v1 operator files."""
    return get_config(config_file, "kco-v1.schema.json")
