from __future__ import annotations

import zlib
from pathlib import Path

import numpy as np
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TaskProgressColumn,
    TextColumn,
    TimeElapsedColumn,
    TimeRemainingColumn,
)

from kahlerbochner.logger import kahlerbochner_log

log = kahlerbochner_log(name="kahlerbochner")


def progress_bar(text: str, color: str = "green") -> Progress:
    return Progress(
        TextColumn(f"[{color}]{text}"),
        SpinnerColumn("dots"),
        TimeElapsedColumn(),
        BarColumn(),
        MofNCompleteColumn(),
        TaskProgressColumn(),
        TimeRemainingColumn(),
    )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Return the generator of one trial.

    Streams only depend on (seed, trial), never on the order trials run in.
    """
    return np.random.default_rng([int(seed), int(trial)])


def check_rng(seed: int, check_id: str) -> np.random.Generator:
    """Return the generator of one named check of the verification suite."""
    return np.random.default_rng([int(seed), zlib.crc32(check_id.encode())])


def round_floats(value, digits: int = 12):
    """Round every float of a nested JSON-like structure to significant digits.

    >>> round_floats({"a": [1.00000000000001, 2]})
    {'a': [1.0, 2]}
    """
    if isinstance(value, float):
        if value == 0 or not np.isfinite(value):
            return float(value)
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {k: round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    if isinstance(value, np.generic):
        return round_floats(value.item(), digits)
    return value


def create_dir_if_absent(output_path: str | Path) -> None:
    """Create a path if it does not exist.

    :param output_path:
    :type output_path: Union[str, Path]
    """
    if isinstance(output_path, str):
        output_path = Path(output_path)
    if not output_path.is_dir():
        log.debug(f"Creating dir: {output_path}")
    output_path.mkdir(parents=True, exist_ok=True)


def create_dir_for_file(file: Path) -> None:
    """Create the path to a file if it does not exist.

    :param file:
    :type file: Path
    """
    create_dir_if_absent(Path(file).absolute().parent)
