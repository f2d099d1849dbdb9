"""Define the command line interface."""

from __future__ import annotations

import sys
from typing import Any

from rich_argparse import RichHelpFormatter

from kahlerbochner._parsers import common_parser
from kahlerbochner.defaults import default_log_level, log_levels
from kahlerbochner.kahlerbochner import kahlerbochner
from kahlerbochner.logger import kahlerbochner_log

log = kahlerbochner_log(name="kahlerbochner")


def cli(argv: Any = sys.argv) -> None:
    """Run the command line tool.

    :param argv: arguments, the program name first, defaults to sys.argv
    :type argv: list[str], optional
    """
    parser = common_parser(formatter_class=RichHelpFormatter)

    args = parser.parse_args(argv[1:])

    log.debug(f"args:\n{args}")

    if getattr(args, "diameter", None) is not None and args.kappa is None:
        parser.error("--diameter requires --kappa")

    log_level = log_levels().index(default_log_level())
    # For each "-v" flag, adjust the logging verbosity accordingly
    # making sure to clamp off the value from 0 to 4, inclusive of both
    for adjustment in args.log_level or ():
        log_level = min(len(log_levels()) - 1, max(log_level + adjustment, 0))
    log_level_name = log_levels()[log_level]

    n_max = getattr(args, "nmax", None)
    if getattr(args, "include_n5", False):
        n_max = max(n_max or 0, 5)

    kahlerbochner(
        action=args.command,
        input_file=getattr(args, "input", None),
        output=args.out,
        as_json=args.json,
        seed=args.seed,
        trials=getattr(args, "trials", None),
        tol=getattr(args, "tol", None),
        resolve_boundary=getattr(args, "resolve_boundary", False),
        kappa=getattr(args, "kappa", None),
        diameter=getattr(args, "diameter", None),
        n_max=n_max,
        checks=getattr(args, "check", None),
        model=getattr(args, "name", None),
        n=getattr(args, "n", None),
        k=getattr(args, "k", None),
        epsilon=getattr(args, "epsilon", None),
        p=getattr(args, "p", None),
        q=getattr(args, "q", None),
        samples=getattr(args, "samples", None),
        log_level_name=log_level_name,
    )
