"""Identity checks run by ``kahlerbochner verify``."""

from __future__ import annotations

import itertools
from collections.abc import Callable

import numpy as np
from attrs import frozen
from rich.console import Console
from rich.table import Table

from kahlerbochner.bochner import (
    action_bound_extremizer,
    action_ratio,
    c_pq_k,
    curvature_quadratic,
    hat_norm_coefficient,
    hodge_report_for,
    quadratic_lower_bound_check,
    tachibana_condition,
    tune_to_condition,
    verify_action_bound,
    weitzenboeck_quadratic,
)
from kahlerbochner.characters import (
    character_sum,
    chi_pq,
    chi_pq_disjoint_expansion,
    chi_pq_k,
    dim_pqk,
    random_torus_point,
    verify_tau_identity,
    weyl_character,
    weyl_signature,
)
from kahlerbochner.complex_exterior import (
    component_projector,
    kahler_power,
    random_form,
    random_piece_form,
    ring_reduce,
)
from kahlerbochner.configuration import tolerance
from kahlerbochner.curvature import (
    decompose,
    einstein_action_bound,
    is_einstein,
    isotropic_curvatures_n2,
    model_cp_k_flat,
    model_cpn,
    model_flat,
    model_n2_einstein_family,
    model_n2_optimality,
    random_einstein,
    random_kahler,
    ricci,
    ring_action_bound,
    spectrum,
)
from kahlerbochner.exceptions import VerificationFailure
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.report import build_report
from kahlerbochner.unitary_lie import (
    act_on_curvature,
    hat_norm_sq,
    hat_norm_sq_eigenbasis,
    n2_basis,
    random_u_element,
    tensor_norm_sq,
)
from kahlerbochner.utils import check_rng, progress_bar

log = kahlerbochner_log(name="kahlerbochner")


@frozen
class CheckResult:
    check_id: str
    statement: str
    passed: bool
    detail: str
    anchor: str = ""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationFailure(message)


def _close(value: float, expected: float, rel: float) -> bool:
    return abs(value - expected) <= rel * max(1.0, abs(expected))


def _bidegrees(n: int):
    """(p, q, k) with a non-degenerate level-k piece."""
    for p, q in itertools.product(range(n + 1), repeat=2):
        for k in range(min(p, q) + 1):
            if p + q - 2 * k > 0 and dim_pqk(n, p, q, k) > 0:
                yield p, q, k


def check_cpk_flat_hat_norm(seed: int, trials: int, n_max: int) -> str:
    rel = tolerance("identity_rel")
    count = 0
    for n in range(1, min(n_max, 5) + 1):
        for k in range(n + 1):
            R = model_cp_k_flat(n, k)
            expected = 32 * k * (k + 1) * (n - k)
            direct = hat_norm_sq(R)
            spectral = hat_norm_sq_eigenbasis(R)
            _require(
                _close(direct, expected, rel) and _close(spectral, expected, rel),
                f"n={n}, k={k}: direct {direct}, eigenbasis {spectral}, "
                f"expected {expected}",
            )
            count += 1
    return f"{count} products checked"


def check_hat_norm_identity(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "hat-norm-identity")
    rel = tolerance("identity_rel")
    worst = 0.0
    for n in range(2, n_max + 1):
        for _ in range(trials):
            R = random_kahler(n, rng)
            parts = decompose(R)
            expected = 4 * (n + 1) * parts.r_ring_norm_sq - 4 * parts.ric0_norm_sq
            value = hat_norm_sq_eigenbasis(R)
            error = abs(value - expected) / max(1.0, abs(expected))
            worst = max(worst, error)
            _require(error <= rel, f"n={n}: {value} != {expected}")
    return f"max relative error {worst:.2e}"


def check_form_coefficient(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "form-coefficient")
    rel = tolerance("form_ratio_rel")
    samples = max(2, trials // 10)
    count = 0
    for n in range(1, n_max + 1):
        for p, q, k in _bidegrees(n):
            expected = hat_norm_coefficient(n, p, q, k)
            for _ in range(samples):
                phi = random_piece_form(n, p, q, k, rng)
                ratio = hat_norm_sq(phi) / ring_reduce(phi).norm_sq()
                _require(
                    _close(ratio, expected, rel),
                    f"(n,p,q,k)={(n, p, q, k)}: ratio {ratio}, expected {expected}",
                )
            count += 1
    return f"{count} pieces checked"


def check_action_bound(seed: int, trials: int, n_max: int) -> str:
    worst = 0.0
    count = 0
    for n in range(1, min(n_max, 4) + 1):
        for p, q, k in _bidegrees(n):
            worst = max(worst, verify_action_bound(n, p, q, k, trials=trials, seed=seed))
            pair = action_bound_extremizer(n, p, q, k)
            if pair is not None:
                ratio = action_ratio(*pair, k)
                _require(
                    ratio is not None and abs(ratio - 1) <= 1e-9,
                    f"extremizer ratio {ratio} for {(n, p, q, k)}",
                )
                count += 1
    return f"max sampled ratio {worst:.6f}, {count} extremizers at ratio 1"


def check_weitzenboeck_paths(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "weitzenboeck-paths")
    rel = tolerance("form_ratio_rel")
    worst = 0.0
    for n in (2, 3):
        if n > n_max:
            continue
        for _ in range(trials):
            R = random_kahler(n, rng)
            p, q = (int(x) for x in rng.integers(0, n + 1, size=2))
            phi = random_form(n, p, q, rng)
            frame = weitzenboeck_quadratic(R, phi, path="frame")
            spectral = weitzenboeck_quadratic(R, phi, path="eigenbasis")
            error = abs(frame - spectral) / max(1.0, abs(spectral))
            worst = max(worst, error)
            _require(
                error <= rel, f"n={n}, ({p},{q}): frame {frame}, eigenbasis {spectral}"
            )
    return f"max relative error {worst:.2e}"


def check_n2_family(seed: int, trials: int, n_max: int) -> str:
    R = model_n2_einstein_family(1.0)
    values = np.asarray(spectrum(R).eigenvalues)
    _require(np.allclose(values, [-1, -1, 6, 8], atol=1e-10), f"spectrum {values}")
    iso = isotropic_curvatures_n2(R)
    components = (iso.r1313, iso.r1414, iso.r2323, iso.r2424)
    _require(np.allclose(components, -0.5, atol=1e-10), f"components {components}")
    _require(abs(iso.r1234 + 1) <= 1e-10, f"R1234 = {iso.r1234}")
    _require(is_einstein(R), "family member is not Einstein")
    return "spectrum {-1, -1, 6, 8}, isotropic curvature -1/2, R1234 = -1"


def check_optimality_example(seed: int, trials: int, n_max: int) -> str:
    R = model_n2_optimality()
    basis = n2_basis()
    ring = decompose(R).r_ring_norm_sq
    hat = hat_norm_sq(R)
    xi2 = tensor_norm_sq(act_on_curvature(basis["2-"], R))
    xi1 = tensor_norm_sq(act_on_curvature(basis["1+"], R))
    lhs, bound = ring_action_bound(basis["2-"], R)
    for name, value, expected in (
        ("|R_ring|^2", ring, 8.0),
        ("|R^u|^2", hat, 96.0),
        ("|X_{2-} R|^2", xi2, 64.0),
        ("|X_{1+} R|^2", xi1, 0.0),
        ("8 |L|^2 |R_ring|^2 - |L R|^2", bound - lhs, 0.0),
    ):
        _require(abs(value - expected) <= 1e-10 * max(1.0, expected), f"{name} = {value}")
    return "equality in |LR|^2 <= 8 |L|^2 |R_ring|^2 attained"


def check_characters(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "characters")
    rel = tolerance("character_rel")
    tau_tol = tolerance("tau_residual")
    for n in range(1, 7):
        points = [random_torus_point(n, rng) for _ in range(trials)]
        for p, q in itertools.product(range(n + 1), repeat=2):
            for point in points[:5]:
                total = chi_pq(point, p, q)
                _require(
                    abs(character_sum(point, p, q) - total)
                    <= 1e-9 * max(1.0, abs(total)),
                    f"telescoping fails at n={n}, ({p},{q})",
                )
                if n <= 5:
                    expansion = chi_pq_disjoint_expansion(point, p, q)
                    _require(
                        abs(expansion - total) <= 1e-8 * max(1.0, abs(total)),
                        f"binomial expansion fails at n={n}, ({p},{q})",
                    )
            for k in range(min(p, q) + 1):
                if p + q > n:
                    continue
                signature = weyl_signature(n, p, q, k)
                for point in points:
                    expected = chi_pq_k(point, p, q, k)
                    value = weyl_character(signature, point)
                    _require(
                        abs(value - expected) <= rel * max(1.0, abs(expected)),
                        f"Weyl character mismatch at {(n, p, q, k)}",
                    )
        if n <= 5:
            for a, b in itertools.product(range(n + 2), repeat=2):
                residual = verify_tau_identity(points[0], a, b)
                _require(
                    residual <= tau_tol, f"tau residual {residual} at n={n}, ({a},{b})"
                )
    for n in range(1, n_max + 1):
        for p, q in itertools.product(range(n + 1), repeat=2):
            for k in range(min(p, q) + 1):
                rank = int(round(np.trace(component_projector(n, p, q, k)).real))
                _require(
                    rank == dim_pqk(n, p, q, k),
                    f"projector rank {rank} != {dim_pqk(n, p, q, k)} at {(n, p, q, k)}",
                )
    return "Weyl characters, tau identity and projector ranks agree"


def check_kernels(seed: int, trials: int, n_max: int) -> str:
    for n in range(1, min(n_max, 5) + 1):
        for k in range(n + 1):
            value = hat_norm_sq(kahler_power(n, k))
            _require(value < 1e-12, f"omega^{k} on C^{n} has hat norm {value}")
        value = hat_norm_sq(model_cpn(n))
        _require(value < 1e-10, f"CP^{n} has hat norm {value}")
    return "omega^k and R_CPn are u(n)-invariant"


def check_condition_checkers(seed: int, trials: int, n_max: int) -> str:
    for n in range(1, n_max + 1):
        report = hodge_report_for(model_cpn(n))
        _require(report.theorem_a.satisfied, f"CP^{n}: weighted condition fails")
        _require(
            report.is_projective_space_diamond(), f"CP^{n}: diamond {report.diamond()}"
        )
        _require(
            tachibana_condition(spectrum(model_cpn(n)), n, warn=False).satisfied,
            f"CP^{n}: rigidity condition fails",
        )

    example = hodge_report_for(model_n2_einstein_family(1.0))
    _require(
        not example.theorem_a.satisfied, "family member satisfies the weighted condition"
    )
    entry = example.entries[(1, 0)]
    _require(
        str(entry.status) == "VANISHES" and entry.route.startswith("ricci"),
        f"Ricci route did not fire: {entry}",
    )

    flat = hodge_report_for(model_flat(2))
    _require(
        flat.all_parallel.satisfied and flat.all_parallel.boundary,
        "zero operator is not a non-strict boundary case",
    )
    unresolved = [
        key
        for key, entry in flat.entries.items()
        if key not in {(0, 0), (2, 2)} and str(entry.status) != "NO_CONCLUSION"
    ]
    _require(not unresolved, f"zero operator classified at {unresolved}")

    rng = check_rng(seed, "condition-checkers")
    for n in (2, 3):
        if n > n_max:
            continue
        for p, q, k in [(1, 0, 0), (1, 1, 0), (2, 1, 1)]:
            if dim_pqk(n, p, q, k) == 0:
                continue
            C = c_pq_k(n, p, q, k)
            for kappa in (0.0, -1.0):
                R = tune_to_condition(random_kahler(n, rng), C, kappa, margin=0.05)
                check = quadratic_lower_bound_check(
                    R, n, p, q, k, kappa, trials=max(2, trials // 10), seed=seed
                )
                _require(
                    bool(check), f"lower bound fails at {(n, p, q, k)}, kappa={kappa}"
                )

    first = build_report(model_cpn(2), seed=seed, trials=trials).to_json()
    second = build_report(model_cpn(2), seed=seed, trials=trials).to_json()
    _require(first == second, "report bytes differ between runs")
    return "model spaces, family member and zero operator classified as expected"


def check_einstein_bound(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "einstein-bound")
    for n in range(2, n_max + 1):
        for _ in range(max(2, trials // 5)):
            R = random_einstein(n, rng)
            L = random_u_element(n, rng)
            lhs, bound = einstein_action_bound(L, R)
            _require(lhs <= bound * (1 + 1e-9) + 1e-12, f"n={n}: {lhs} > {bound}")
            lhs, bound = ring_action_bound(L, R)
            _require(lhs <= bound * (1 + 1e-9) + 1e-12, f"n={n}: {lhs} > {bound}")
            tuned = tune_to_condition(R, (n + 1) / 2, 0.0, margin=0.05)
            value = curvature_quadratic(tuned)
            _require(
                value >= -1e-9 * max(1.0, tuned.norm_sq()), f"n={n}: quadratic {value}"
            )
    return "Einstein action bound and rigidity quadratic hold"


def check_decomposition(seed: int, trials: int, n_max: int) -> str:
    rng = check_rng(seed, "decomposition")
    rel = tolerance("identity_rel")
    for n in range(1, n_max + 1):
        for _ in range(max(2, trials // 5)):
            R = random_kahler(n, rng)
            parts = decompose(R)
            total = (
                parts.scalar_part_norm_sq
                + parts.ricci_part_norm_sq
                + parts.bochner_norm_sq
            )
            _require(_close(total, R.norm_sq(), rel), f"n={n}: parts are not orthogonal")
            _require(
                np.allclose(ricci(parts.bochner), 0, atol=1e-9 * max(1.0, R.norm_sq())),
                f"n={n}: Bochner part has Ricci curvature",
            )
            expected = 2 / (n + 2) * parts.ric0_norm_sq
            _require(_close(parts.ricci_part_norm_sq, expected, rel), f"n={n}: |R0|^2")
    return "scalar, trace-free Ricci and Bochner parts orthogonal"


CHECKS: dict[str, tuple[str, Callable[[int, int, int], str]]] = {
    "cpk-flat-hat-norm": (
        "|R^u|^2 = 32 k (k+1) (n-k) on CP^k x C^(n-k)",
        check_cpk_flat_hat_norm,
    ),
    "hat-norm-identity": (
        "|R^u|^2 = 4 (n+1) |R_ring|^2 - 4 |Ric_0|^2",
        check_hat_norm_identity,
    ),
    "form-coefficient": (
        "|phi^u|^2 = (2 (p-k)(q-k) + (p+q-2k)(n+1-p-q+2k)) |phi_ring|^2",
        check_form_coefficient,
    ),
    "action-bound": (
        "|L phi|^2 <= (p+q-2k) |L|^2 |phi_ring|^2, sharp",
        check_action_bound,
    ),
    "weitzenboeck-paths": (
        "frame double sum = sum_a lambda_a |X_a phi|^2",
        check_weitzenboeck_paths,
    ),
    "n2-family": ("Einstein family on C^2 with lambda_1 + lambda_2 < 0", check_n2_family),
    "optimality-example": (
        "|LR|^2 <= 8 |L|^2 |R_ring|^2 is sharp",
        check_optimality_example,
    ),
    "characters": ("Weyl character of L^k P^{p-k,q-k}", check_characters),
    "kernels": ("omega^k and R_CPn have vanishing hat norm", check_kernels),
    "condition-checkers": (
        "eigenvalue conditions and Hodge statuses",
        check_condition_checkers,
    ),
    "einstein-bound": (
        "|LR|^2 <= 2/(n+1) |L|^2 |R^u|^2 for Kahler-Einstein R",
        check_einstein_bound,
    ),
    "decomposition": ("R = scalar part + R_0 + B orthogonally", check_decomposition),
}

ANCHORS: dict[str, str] = {
    "cpk-flat-hat-norm": "hat norm of CP^k x C^(n-k)",
    "hat-norm-identity": "hat norm of a curvature operator",
    "form-coefficient": "hat norm on the pieces of (p, q)-forms",
    "action-bound": "action bound on (p, q)-forms",
    "weitzenboeck-paths": "Weitzenboeck curvature term",
    "n2-family": "optimality of lambda_1 + lambda_2 > 0 on C^2",
    "optimality-example": "sharpness of the curvature action bound",
    "characters": "torus characters of the pieces",
    "kernels": "kernel of the hat norm",
    "condition-checkers": "vanishing and rigidity conditions",
    "einstein-bound": "Kahler-Einstein action bound",
    "decomposition": "orthogonal curvature decomposition",
}



def run_checks(
    seed: int,
    trials: int,
    n_max: int,
    selected: list[str] | None = None,
) -> list[CheckResult]:
    """Run the selected checks; failures are collected, not raised.

    :raises KeyError: for an unknown check id
    """
    ids = list(CHECKS) if not selected else list(selected)
    for check_id in ids:
        if check_id not in CHECKS:
            raise KeyError(f"Unknown check '{check_id}'. Available: {', '.join(CHECKS)}")

    results = []
    with progress_bar(text="Verifying") as progress:
        task = progress.add_task(description="checks", total=len(ids))
        for check_id in ids:
            statement, check = CHECKS[check_id]
            log.debug(f"Running check: {check_id}")
            try:
                detail = check(seed, trials, n_max)
                passed = True
            except VerificationFailure as exc:
                detail = str(exc)
                passed = False
                log.error(f"{check_id}: {detail}")
            results.append(
                CheckResult(check_id, statement, passed, detail, ANCHORS.get(check_id, ""))
            )
            progress.update(task, advance=1)
    return results


def results_table(results: list[CheckResult]) -> Table:
    table = Table(title="Verification")
    table.add_column("check")
    table.add_column("anchor")
    table.add_column("identity")
    table.add_column("result")
    table.add_column("detail", overflow="fold")
    for result in results:
        status = "[green]PASS" if result.passed else "[red]FAIL"
        table.add_row(
            result.check_id, result.anchor, result.statement, status, result.detail
        )
    return table


def print_results(results: list[CheckResult], console: Console | None = None) -> None:
    (console or Console()).print(results_table(results))
