"""Assemble curvature reports and render them as JSON or markdown."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from attrs import asdict, define, field
from jinja2 import Environment, FileSystemLoader, select_autoescape

from kahlerbochner._version import __version__
from kahlerbochner.bochner import (
    HodgeReport,
    hodge_report,
    ricci_eigenvalues,
    tachibana_condition,
    theorem_a_condition,
)
from kahlerbochner.curvature import (
    KahlerCurvature,
    decompose,
    is_einstein,
    isotropic_curvatures_n2,
    min_orthogonal_bisectional,
    min_orthogonal_bisectional_exact_n2,
    spectrum,
)
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.unitary_lie import hat_norm_sq
from kahlerbochner.utils import create_dir_for_file, round_floats

log = kahlerbochner_log(name="kahlerbochner")

TEMPLATES_DIR = Path(__file__).parent / "templates"

ESTIMATE_NOTE = (
    "Hodge number estimates leave the constant C(n, kappa D^2) symbolic; "
    "only the binomial cap and the square-root argument are reported."
)
SAMPLING_NOTE = (
    "The orthogonal bisectional minimum for n >= 3 is sampled and only bounds "
    "the true minimum from above."
)


def return_jinja_env(searchpath=None) -> Environment:
    if searchpath is None:
        searchpath = TEMPLATES_DIR
    return Environment(
        loader=FileSystemLoader(searchpath),
        autoescape=select_autoescape(),
        lstrip_blocks=True,
        trim_blocks=True,
    )


@define
class ReportDocument:
    """Everything a report says about one curvature operator."""

    name: str
    digest: str
    n: int
    spectrum: list[float]
    decomposition: dict[str, float]
    einstein: bool
    conditions: list[dict]
    hodge: dict
    seed: int
    trials: int
    orthogonal_bisectional: dict | None = None
    isotropic: dict | None = None
    warnings: list[str] = field(factory=list)
    version: str = __version__

    def to_dict(self) -> dict:
        return round_floats(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=4, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        template = return_jinja_env().get_template("report.md.j2")
        return template.render(doc=self.to_dict())

    def write(self, output: str | Path, as_json: bool = True) -> Path:
        output = Path(output)
        create_dir_for_file(output)
        content = self.to_json() if as_json else self.to_markdown()
        output.write_text(content, encoding="utf-8")
        log.info(f"Report saved at: '{output}'.")
        return output


def _condition_rows(values, n: int, report: HodgeReport, einstein: bool) -> list[dict]:
    rows = [
        {"name": "positive weighted sum at 3 - 2/n", **report.theorem_a.to_dict()},
        {"name": "harmonic forms parallel", **report.all_parallel.to_dict()},
    ]
    for strict in (True, False):
        result = tachibana_condition(values, n, strict=strict, warn=False)
        label = "Kahler-Einstein rigidity" + ("" if strict else " (non-strict)")
        rows.append({"name": label, "applies": einstein and n >= 4, **result.to_dict()})
    if report.total_betti_margin is not None:
        total = theorem_a_condition(values, n, strict=False)
        rows.append(
            {
                "name": "total Betti estimate",
                **total.to_dict(),
                "margin": report.total_betti_margin,
                "satisfied": report.total_betti_cap is not None,
                "kappa": report.kappa,
            }
        )
    return rows


def build_report(
    R: KahlerCurvature,
    name: str = "operator",
    digest: str = "",
    kappa: float | None = None,
    diameter: float | None = None,
    seed: int = 0,
    trials: int = 1000,
    einstein_tol: float = 1e-9,
    resolve_boundary: bool = False,
) -> ReportDocument:
    """Spectrum, decomposition norms, condition table and Hodge conclusions of R.

    With ``resolve_boundary`` the Hodge entries whose margin falls in the boundary
    band are reported as PARALLEL_ONLY instead of NO_CONCLUSION.
    """
    spec = spectrum(R)
    values = np.asarray(spec.eigenvalues)
    parts = decompose(R)
    einstein = is_einstein(R, einstein_tol)
    report = hodge_report(
        spec,
        R.n,
        kappa=kappa,
        diameter=diameter,
        ricci_eigenvalues=ricci_eigenvalues(R),
        resolve_boundary=resolve_boundary,
    )

    warnings = []
    boundary = sorted({(e.p, e.q) for e in report.entries.values() if e.boundary})
    if boundary:
        if resolve_boundary:
            message = f"Boundary margins read as parallel-only at (p, q) = {boundary}."
        else:
            message = f"Boundary margins left unclassified at (p, q) = {boundary}."
        log.warning(message)
        warnings.append(message)
    if kappa is not None and diameter is not None:
        warnings.append(ESTIMATE_NOTE)

    bisectional = None
    if R.n == 2:
        bisectional = {"method": "exact", "value": min_orthogonal_bisectional_exact_n2(R)}
    elif R.n >= 3:
        bisectional = {
            "method": "sampled",
            "value": min_orthogonal_bisectional(R, trials=trials, seed=seed),
        }
        warnings.append(SAMPLING_NOTE)

    isotropic = None
    if R.n == 2:
        iso = isotropic_curvatures_n2(R)
        isotropic = asdict(iso)
        isotropic["combinations"] = list(iso.combinations)

    return ReportDocument(
        name=name,
        digest=digest,
        n=R.n,
        spectrum=spec.tolist(),
        decomposition={
            "scal": parts.scal,
            "ric0_norm_sq": parts.ric0_norm_sq,
            "r_ring_norm_sq": parts.r_ring_norm_sq,
            "bochner_norm_sq": parts.bochner_norm_sq,
            "hat_norm_sq": hat_norm_sq(R),
        },
        einstein=einstein,
        conditions=_condition_rows(values, R.n, report, einstein),
        hodge=report.to_dict(),
        seed=seed,
        trials=trials,
        orthogonal_bisectional=bisectional,
        isotropic=isotropic,
        warnings=warnings,
    )
