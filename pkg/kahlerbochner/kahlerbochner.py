#!/usr/bin/env python
"""Main script."""

from __future__ import annotations

import json
import sys
from math import comb
from pathlib import Path

from rich.console import Console
from rich.table import Table

from kahlerbochner._version import __version__
from kahlerbochner.configuration import Config, config_to_dict
from kahlerbochner.defaults import (
    default_log_level,
    default_nmax,
    default_seed,
    default_trials,
)
from kahlerbochner.exceptions import KahlerCurvatureError
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.utils import create_dir_for_file, round_floats

log = kahlerbochner_log(name="kahlerbochner")


def kahlerbochner(
    action: str,
    input_file: str | None = None,
    output: str | None = None,
    as_json: bool = False,
    seed: int | None = None,
    trials: int | None = None,
    tol: float | None = None,
    kappa: float | None = None,
    resolve_boundary: bool = False,
    diameter: float | None = None,
    n_max: int | None = None,
    checks: list[str] | None = None,
    model: str | None = None,
    n: int | None = None,
    k: int | None = None,
    epsilon: float | None = None,
    p: int | None = None,
    q: int | None = None,
    samples: int | None = None,
    log_level_name: str | None = None,
) -> None:
    if log_level_name is None:
        log_level_name = default_log_level()
    log.setLevel(log_level_name)

    log.info(f"Running kahlerbochner version {__version__}")

    cfg = Config(
        seed if seed is not None else default_seed(),
        trials if trials is not None else default_trials(),
        tol=tol if tol is not None else 1e-9,
        kappa=kappa,
        diameter=diameter,
        n_max=n_max if n_max is not None else default_nmax(),
        resolve_boundary=resolve_boundary,
    )
    log.debug(f"Configuration:\n{config_to_dict(cfg)}")
    log.debug(f"{action=}")

    try:
        if action == "spectrum":
            cmd_spectrum(input_file, output=output, as_json=as_json)
        elif action == "report":
            cmd_report(input_file, cfg, output=output, as_json=as_json)
        elif action == "model":
            cmd_model(model, n=n, k=k, epsilon=epsilon, output=output)
        elif action == "verify":
            failed = cmd_verify(cfg, checks=checks, output=output, as_json=as_json)
            if failed:
                sys.exit(1)
        elif action == "characters":
            cmd_characters(
                n,
                p,
                q,
                samples=samples or 10,
                seed=cfg.seed,
                output=output,
                as_json=as_json,
            )
        else:
            log.error(f"Unknown action: {action}")
            sys.exit(1)
    except (KahlerCurvatureError, FileNotFoundError) as exc:
        log.error(f"{type(exc).__name__}: {exc}")
        sys.exit(1)


def _emit(content: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(content)
        return
    path = Path(output)
    create_dir_for_file(path)
    path.write_text(content, encoding="utf-8")
    log.info(f"Output written to: '{path}'.")


def cmd_spectrum(
    input_file: str, output: str | None = None, as_json: bool = False
) -> list[float]:
    from kahlerbochner.curvature import spectrum
    from kahlerbochner.operator_file import load_operator

    R = load_operator(input_file)
    values = spectrum(R).tolist()
    if as_json or output is not None:
        document = {"n": R.n, "spectrum": values}
        _emit(json.dumps(round_floats(document), indent=4, sort_keys=True) + "\n", output)
    else:
        table = Table(title=f"Spectrum of {Path(input_file).name}")
        table.add_column("#", justify="right")
        table.add_column("eigenvalue", justify="right")
        for idx, value in enumerate(values, start=1):
            table.add_row(str(idx), f"{value:.10g}")
        Console().print(table)
    return values


def cmd_report(
    input_file: str, cfg: Config, output: str | None = None, as_json: bool = False
):
    from kahlerbochner.operator_file import file_digest, load_operator
    from kahlerbochner.report import build_report

    R = load_operator(input_file)
    document = build_report(
        R,
        name=Path(input_file).name,
        digest=file_digest(input_file),
        kappa=cfg.kappa,
        diameter=cfg.diameter,
        seed=cfg.seed,
        trials=cfg.trials,
        einstein_tol=cfg.tol,
        resolve_boundary=cfg.resolve_boundary,
    )
    if output is not None:
        as_json = as_json or Path(output).suffix == ".json"
    _emit(document.to_json() if as_json else document.to_markdown(), output)
    return document


def build_model(name: str, n: int = 2, k: int = 1, epsilon: float = 1.0):
    """Return the model tensor and the metadata stored with it."""
    from kahlerbochner import curvature

    if name in {"example_2pos", "example_optimality"} and n != 2:
        log.warning(f"Model '{name}' lives on C^2; ignoring n={n}.")
    if name == "cpn":
        return curvature.model_cpn(n), {"name": name}
    if name == "cpk_flat":
        return curvature.model_cp_k_flat(n, k), {"name": name, "k": k}
    if name == "flat":
        return curvature.model_flat(n), {"name": name}
    if name == "example_2pos":
        return curvature.model_n2_einstein_family(epsilon), {
            "name": name,
            "epsilon": epsilon,
            "mu": [6.0, 0.0, 0.0, 6.0 + 2 * epsilon, -epsilon, -epsilon],
        }
    if name == "example_optimality":
        return curvature.model_n2_optimality(), {
            "name": name,
            "mu": [3.0, 0.0, 0.0, -1.0, 1.0, 3.0],
        }
    raise ValueError(f"Unknown model '{name}'.")


def cmd_model(
    name: str,
    n: int | None = None,
    k: int | None = None,
    epsilon: float | None = None,
    output: str | None = None,
) -> Path:
    from kahlerbochner.operator_file import save_operator

    n = 2 if n is None else n
    R, metadata = build_model(name, n=n, k=1 if k is None else k, epsilon=epsilon or 1.0)
    if output is None:
        output = f"{name}_n{R.n}.json"
    return save_operator(R, output, metadata=metadata)


def cmd_verify(
    cfg: Config,
    checks: list[str] | None = None,
    output: str | None = None,
    as_json: bool = False,
) -> list[str]:
    """Run the checks and return the ids of those that failed."""
    from kahlerbochner.verify import print_results, run_checks

    try:
        results = run_checks(cfg.seed, cfg.trials, cfg.n_max, selected=checks)
    except KeyError as exc:
        log.error(exc.args[0])
        sys.exit(2)

    if as_json or output is not None:
        document = {
            "n_max": cfg.n_max,
            "seed": cfg.seed,
            "trials": cfg.trials,
            "results": [
                {
                    "id": r.check_id,
                    "anchor": r.anchor,
                    "identity": r.statement,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        _emit(json.dumps(document, indent=4, sort_keys=True) + "\n", output)
    if not as_json:
        print_results(results)
    return [r.check_id for r in results if not r.passed]


def cmd_characters(
    n: int,
    p: int,
    q: int,
    samples: int = 10,
    seed: int = 0,
    output: str | None = None,
    as_json: bool = False,
) -> list[dict]:
    """Dimensions of the pieces of the (p, q)-forms and a Weyl character spot check."""
    from kahlerbochner.characters import (
        chi_pq_k,
        dim_from_character,
        dim_pqk,
        random_torus_point,
        weyl_character,
        weyl_signature,
    )
    from kahlerbochner.exceptions import DimensionMismatch
    from kahlerbochner.utils import check_rng

    if not (0 <= p <= n and 0 <= q <= n):
        raise DimensionMismatch(f"Bidegree ({p}, {q}) out of range for n={n}.")
    rng = check_rng(seed, "characters")
    points = [random_torus_point(n, rng) for _ in range(samples)]
    rows = []
    for k in range(min(p, q) + 1):
        row = {
            "k": k,
            "dimension": dim_pqk(n, p, q, k),
            "dimension_from_character": dim_from_character(n, p, q, k),
            "signature": None,
            "max_weyl_residual": None,
        }
        if p + q - 2 * k <= n and row["dimension"] > 0:
            signature = weyl_signature(n, p, q, k)
            residual = max(
                abs(weyl_character(signature, point) - chi_pq_k(point, p, q, k))
                for point in points
            )
            row["signature"] = list(signature)
            row["max_weyl_residual"] = float(residual)
        rows.append(row)

    if as_json or output is not None:
        _emit(json.dumps(round_floats(rows), indent=4, sort_keys=True) + "\n", output)
    if not as_json:
        table = Table(title=f"Pieces of the ({p}, {q})-forms on C^{n}")
        for column in ("k", "dimension", "from character", "signature", "Weyl residual"):
            table.add_column(column)
        for row in rows:
            residual = row["max_weyl_residual"]
            table.add_row(
                str(row["k"]),
                str(row["dimension"]),
                str(row["dimension_from_character"]),
                "" if row["signature"] is None else str(tuple(row["signature"])),
                "" if residual is None else f"{residual:.2e}",
            )
        Console().print(table)
    total = sum(row["dimension"] for row in rows)
    if total != comb(n, p) * comb(n, q):
        log.warning(f"Piece dimensions sum to {total}, not C(n,p) C(n,q).")
    return rows
