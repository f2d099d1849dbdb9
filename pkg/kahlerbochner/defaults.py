"""Store defaults."""

from __future__ import annotations


def default_log_level() -> str:
    """Return default log level."""
    return "WARNING"


def log_levels() -> list[str]:
    """Return a list of log levels."""
    return ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def default_seed() -> int:
    return 42


def default_trials() -> int:
    """Return the default number of random trials per check."""
    return 50


def default_nmax() -> int:
    """Return the largest complex dimension covered by the default verification run."""
    return 4


def max_dimension() -> int:
    return 6


def default_model() -> str:
    """Return default model."""
    return "cpn"


def available_models() -> list[str]:
    """Return a list of available models."""
    return [
        "cpn",
        "cpk_flat",
        "flat",
        "example_2pos",
        "example_optimality",
    ]
