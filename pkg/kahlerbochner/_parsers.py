from __future__ import annotations

from argparse import ArgumentParser, ArgumentTypeError, HelpFormatter

from kahlerbochner._version import __version__
from kahlerbochner.defaults import (
    available_models,
    default_model,
    default_nmax,
    default_seed,
    default_trials,
    max_dimension,
)


def _non_positive_float(value: str) -> float:
    number = float(value)
    if number > 0:
        raise ArgumentTypeError(f"must be <= 0, got {value}")
    return number


def _positive_float(value: str) -> float:
    number = float(value)
    if number <= 0:
        raise ArgumentTypeError(f"must be > 0, got {value}")
    return number


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise ArgumentTypeError(f"must be >= 1, got {value}")
    return number


def _dimension(value: str) -> int:
    number = int(value)
    if not 1 <= number <= max_dimension():
        raise ArgumentTypeError(f"must be between 1 and {max_dimension()}, got {value}")
    return number


def _base_parser(formatter_class: type[HelpFormatter] = HelpFormatter) -> ArgumentParser:
    parser = ArgumentParser(
        description=(
            "Spectra, curvature decompositions and Bochner-technique conditions "
            "of algebraic Kahler curvature operators."
        ),
        epilog="""
        Operators are read from and written to kco-v1 JSON files.
        Exit codes: 0 success, 1 failed identity or invalid input, 2 usage error.
        """,
        formatter_class=formatter_class,
    )
    parser.add_argument(
        "--version",
        action="version",
        help="show program's version number and exit",
        version=f"\nkahlerbochner version {__version__}\n",
    )
    return parser


def _add_common_arguments(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        "-v",
        "--verbose",
        dest="log_level",
        action="append_const",
        const=-1,
    )
    parser.add_argument(
        "--seed",
        help=f"Seed of every random stream. Default: {default_seed()}.",
        type=int,
        default=default_seed(),
    )
    parser.add_argument(
        "--json",
        help="Print or write JSON instead of a table / markdown.",
        action="store_true",
    )
    parser.add_argument(
        "--out",
        help="File to write the output to.",
    )
    return parser


def _add_input(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        help="kco-v1 operator file.",
        required=True,
    )


def _add_trials(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--trials",
        help=f"Number of random trials. Default: {default_trials()}.",
        type=_positive_int,
        default=default_trials(),
    )


def common_parser(formatter_class: type[HelpFormatter] = HelpFormatter) -> ArgumentParser:
    """Build the parser with all subcommands."""
    parser = _base_parser(formatter_class=formatter_class)
    subparsers = parser.add_subparsers(
        dest="command",
        help="Choose a subcommand",
        required=True,
    )

    spectrum_parser = subparsers.add_parser(
        "spectrum",
        help="Print the ascending eigenvalues of the operator on u(n).",
        formatter_class=parser.formatter_class,
    )
    spectrum_parser = _add_common_arguments(spectrum_parser)
    _add_input(spectrum_parser)

    report_parser = subparsers.add_parser(
        "report",
        help="""Spectrum, decomposition norms, eigenvalue conditions
and the Hodge numbers they determine.""",
        formatter_class=parser.formatter_class,
    )
    report_parser = _add_common_arguments(report_parser)
    _add_input(report_parser)
    _add_trials(report_parser)
    report_parser.add_argument(
        "--kappa",
        help="Lower bound on the eigenvalue condition for the estimates (<= 0).",
        type=_non_positive_float,
    )
    report_parser.add_argument(
        "--diameter",
        help="Diameter bound D > 0 for the estimates; needs --kappa.",
        type=_positive_float,
    )
    report_parser.add_argument(
        "--tol",
        help="Tolerance of the Einstein test on the trace-free Ricci tensor.",
        type=_positive_float,
        default=1e-9,
    )
    report_parser.add_argument(
        "--resolve-boundary",
        help="Report Hodge entries with a margin in the boundary band as parallel-only.",
        action="store_true",
    )

    model_parser = subparsers.add_parser(
        "model",
        help="Write a model operator to a kco-v1 file.",
        formatter_class=parser.formatter_class,
    )
    model_parser = _add_common_arguments(model_parser)
    model_parser.add_argument(
        "name",
        help=f"Model to write. Default model: {default_model()}.",
        choices=available_models(),
        default=default_model(),
        nargs="?",
    )
    model_parser.add_argument(
        "--n",
        help="Complex dimension.",
        type=_dimension,
        default=2,
    )
    model_parser.add_argument(
        "--k",
        help="Dimension of the projective factor for 'cpk_flat'.",
        type=int,
        default=1,
    )
    model_parser.add_argument(
        "--epsilon",
        help="Parameter of 'example_2pos' (> 0).",
        type=_positive_float,
        default=1.0,
    )

    verify_parser = subparsers.add_parser(
        "verify",
        help="Run the identity checks and print a pass / fail table.",
        formatter_class=parser.formatter_class,
    )
    verify_parser = _add_common_arguments(verify_parser)
    _add_trials(verify_parser)
    verify_parser.add_argument(
        "--nmax",
        help=f"Largest complex dimension checked. Default: {default_nmax()}.",
        type=_dimension,
        default=default_nmax(),
    )
    verify_parser.add_argument(
        "--include-n5",
        help="Extend the checks to n = 5.",
        action="store_true",
    )
    verify_parser.add_argument(
        "--check",
        help="Only run these checks (by id).",
        nargs="+",
    )

    characters_parser = subparsers.add_parser(
        "characters",
        help="Dimensions and torus characters of the pieces of the (p, q)-forms.",
        formatter_class=parser.formatter_class,
    )
    characters_parser = _add_common_arguments(characters_parser)
    characters_parser.add_argument("--n", type=_dimension, required=True)
    characters_parser.add_argument("--p", type=int, required=True)
    characters_parser.add_argument("--q", type=int, required=True)
    characters_parser.add_argument(
        "--samples",
        help="Random torus points per piece.",
        type=_positive_int,
        default=10,
    )

    return parser
