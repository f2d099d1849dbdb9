from __future__ import annotations

from math import sqrt

import numpy as np
import pytest

from kahlerbochner.bochner import (
    HodgeStatus,
    WeightedCondition,
    action_bound_extremizer,
    action_ratio,
    c_pq,
    c_pq_k,
    curvature_quadratic,
    hat_norm_coefficient,
    hodge_report,
    hodge_report_for,
    integer_condition,
    lemma_lower_bound,
    quadratic_lower_bound_check,
    ricci_eigenvalues,
    tachibana_condition,
    theorem_a_condition,
    tune_to_condition,
    verify_action_bound,
    weighted_sum,
    weitzenboeck_quadratic,
)
from kahlerbochner.complex_exterior import random_form, random_piece_form, ring_reduce
from kahlerbochner.curvature import (
    model_cpn,
    model_flat,
    random_kahler,
    spectrum,
    to_operator_matrix,
)
from kahlerbochner.exceptions import DimensionMismatch, KahlerCurvatureError
from kahlerbochner.unitary_lie import hat_norm_sq


def test_c_pq():
    assert c_pq(4, 4, 0) == 1.0
    assert c_pq(2, 1, 1) == 2.0
    assert c_pq(3, 1, 0) == 3.0
    with pytest.raises(DimensionMismatch):
        c_pq(2, 0, 0)


@pytest.mark.parametrize("n, p, q", [(2, 1, 0), (3, 2, 1), (4, 2, 2), (5, 3, 1)])
def test_c_pq_k_at_level_zero(n, p, q):
    assert c_pq_k(n, p, q, 0) == pytest.approx(c_pq(n, p, q))


@pytest.mark.parametrize(
    "n, p, q, k", [(3, 2, 1, 1), (4, 2, 2, 1), (5, 3, 2, 1), (5, 3, 3, 2)]
)
def test_c_pq_k_is_coefficient_per_degree(n, p, q, k):
    expected = hat_norm_coefficient(n, p, q, k) / (p + q - 2 * k)
    assert c_pq_k(n, p, q, k) == pytest.approx(expected)


def test_c_pq_k_degenerate():
    assert c_pq_k(2, 1, 1, 1) is None
    with pytest.raises(DimensionMismatch):
        c_pq_k(3, 1, 1, 2)


def test_weighted_sum():
    satisfied, margin = weighted_sum([-1, -1, 6, 8], 2.5)
    assert satisfied
    assert margin == 1.0

    result = weighted_sum([1, 2, 3, 4], 2.5, kappa=-1)
    assert result.margin == pytest.approx(7.5)
    assert result.constant == 2.5
    assert result.kappa == -1


def test_weighted_sum_boundary():
    strict = weighted_sum([0, 0, 0, 0], 2)
    assert not strict.satisfied
    assert strict.boundary

    non_strict = weighted_sum([0, 0, 0, 0], 2, strict=False)
    assert non_strict.satisfied
    assert non_strict.boundary


def test_weighted_sum_sorts_input():
    assert weighted_sum([8, 6, -1, -1], 2.5).margin == 1.0


def test_weighted_condition():
    condition = WeightedCondition.from_constant(7 / 3)
    assert condition.count == 2
    assert condition.weight == pytest.approx(1 / 3)
    assert condition.constant == pytest.approx(7 / 3)

    integer = WeightedCondition.from_constant(2.0)
    assert (integer.count, integer.weight) == (2, 0.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"count": 0, "weight": 0.5},
        {"count": 1, "weight": 1.5},
        {"count": 1, "weight": 0.5, "kappa": 1.0},
    ],
)
def test_weighted_condition_errors(kwargs):
    with pytest.raises(ValueError):
        WeightedCondition(**kwargs)


def test_weighted_condition_needs_enough_eigenvalues():
    with pytest.raises(DimensionMismatch):
        WeightedCondition(4, 0.5).evaluate([1, 2, 3, 4])
    with pytest.raises(ValueError):
        WeightedCondition.from_constant(0.5)


def test_integer_condition():
    result = integer_condition([1, 2, 3, 4], 2, kappa=-1)
    assert result.satisfied
    assert result.margin == pytest.approx(5.0)
    with pytest.raises(DimensionMismatch):
        integer_condition([1, 2, 3, 4], 2.5)


def test_lemma_lower_bound():
    assert lemma_lower_bound(2.5, -1.0) == pytest.approx(-1.2)
    assert lemma_lower_bound(2.0, 0.0) == 0.0


def test_theorem_a_condition(cp2, einstein_family):
    result = theorem_a_condition(spectrum(cp2), 2)
    assert result.satisfied
    assert result.margin == pytest.approx(4.0)
    assert not theorem_a_condition(spectrum(einstein_family), 2).satisfied

    cp3 = theorem_a_condition(spectrum(model_cpn(3)), 3)
    assert cp3.margin == pytest.approx(4 + 2 / 3)


def test_tachibana_condition(caplog, einstein_family):
    result = tachibana_condition(spectrum(model_cpn(4)), 4)
    assert result.satisfied
    assert result.constant == pytest.approx(2.5)

    with caplog.at_level("WARNING"):
        result = tachibana_condition(spectrum(einstein_family), 2)
    assert "n=2 < 4" in caplog.text
    assert result.margin == pytest.approx(-1.5)


@pytest.mark.parametrize("n, p, q", [(2, 1, 1), (2, 2, 0), (3, 2, 1), (3, 1, 1)])
def test_weitzenboeck_paths_agree(rng, n, p, q):
    R = random_kahler(n, rng)
    phi = random_form(n, p, q, rng)
    frame = weitzenboeck_quadratic(R, phi, path="frame")
    eigen = weitzenboeck_quadratic(R, phi, path="eigenbasis")
    assert frame == pytest.approx(eigen, rel=1e-8, abs=1e-8)


def test_weitzenboeck_on_matrix(rng):
    R = random_kahler(2, rng)
    phi = random_form(2, 1, 0, rng)
    assert weitzenboeck_quadratic(to_operator_matrix(R), phi) == pytest.approx(
        weitzenboeck_quadratic(R, phi)
    )


def test_weitzenboeck_unknown_path(cp2, rng):
    with pytest.raises(ValueError):
        weitzenboeck_quadratic(cp2, random_form(2, 1, 1, rng), path="other")


def test_weitzenboeck_cpn(rng):
    phi = random_form(3, 1, 1, rng)
    value = weitzenboeck_quadratic(model_cpn(3), phi)
    assert value == pytest.approx(2 * hat_norm_sq(phi))


def test_curvature_quadratic_vanishes_on_cpn():
    assert curvature_quadratic(model_cpn(3)) == pytest.approx(0, abs=1e-10)


@pytest.mark.parametrize(
    "n, p, q, k", [(2, 1, 0, 0), (3, 2, 1, 0), (3, 2, 1, 1), (4, 2, 2, 1)]
)
def test_action_bound_extremizer(n, p, q, k):
    L, phi = action_bound_extremizer(n, p, q, k)
    assert action_ratio(L, phi, k) == pytest.approx(1.0)


def test_action_bound_extremizer_none():
    assert action_bound_extremizer(2, 1, 1, 1) is None
    assert action_bound_extremizer(2, 2, 1, 0) is None


def test_verify_action_bound():
    assert verify_action_bound(3, 2, 1, 0, trials=10, seed=0) <= 1 + 1e-9
    with pytest.raises(KahlerCurvatureError):
        verify_action_bound(2, 1, 1, 1)


@pytest.mark.parametrize("n, p, q, k", [(2, 1, 1, 0), (3, 2, 1, 0), (3, 2, 2, 1)])
def test_form_coefficient(rng, n, p, q, k):
    phi = random_piece_form(n, p, q, k, rng)
    ratio = hat_norm_sq(phi) / ring_reduce(phi).norm_sq()
    assert ratio == pytest.approx(hat_norm_coefficient(n, p, q, k), rel=1e-8)


@pytest.mark.parametrize("kappa", [0.0, -1.0])
def test_quadratic_lower_bound(rng, kappa):
    n, p, q, k = 2, 1, 1, 0
    C = c_pq_k(n, p, q, k)
    R = tune_to_condition(random_kahler(n, rng), C, kappa, margin=0.05)
    check = quadratic_lower_bound_check(R, n, p, q, k, kappa, trials=5, seed=3)
    assert check.precondition_met
    assert check.holds
    assert check.trials == 5
    assert bool(check)


def test_quadratic_lower_bound_corollary(rng):
    n, p, q = 3, 1, 0
    R = tune_to_condition(random_kahler(n, rng), c_pq(n, p, q), 0.0, margin=0.05)
    check = quadratic_lower_bound_check(
        R, n, p, q, 0, trials=5, corollary=True, strict=True
    )
    assert bool(check)
    assert check.positive


def test_quadratic_lower_bound_unmet(einstein_family):
    check = quadratic_lower_bound_check(einstein_family, 2, 1, 0, 0)
    assert not check.precondition_met
    assert check.holds is None
    assert not check


def test_quadratic_lower_bound_degenerate(cp2):
    check = quadratic_lower_bound_check(cp2, 2, 1, 1, 1)
    assert check.precondition is None
    assert check.holds


def test_quadratic_lower_bound_integer_variant():
    check = quadratic_lower_bound_check(
        model_cpn(3), 3, 1, 1, 0, trials=3, integer_variant=True
    )
    assert bool(check)
    not_integer = quadratic_lower_bound_check(
        model_cpn(3), 3, 2, 1, 0, integer_variant=True
    )
    assert not_integer.precondition is None


def test_quadratic_lower_bound_dimension(cp2):
    with pytest.raises(DimensionMismatch):
        quadratic_lower_bound_check(cp2, 3, 1, 0, 0)


def test_tune_to_condition(rng):
    R = tune_to_condition(random_kahler(3, rng), 2.5, -0.5, margin=0.1)
    assert weighted_sum(spectrum(R), 2.5, -0.5).margin == pytest.approx(0.1, abs=1e-8)


def test_hodge_report_cpn(cp2):
    report = hodge_report_for(cp2)
    assert report.is_projective_space_diamond()
    assert report.diamond() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert report.theorem_a.satisfied
    assert report.status(1, 1) is HodgeStatus.EQUALS_ONE
    assert report.entries[(2, 1)].route.startswith("serre-fold:")
    assert report.entries[(0, 0)].route == "constants"


@pytest.mark.parametrize("n", [3, 4])
def test_hodge_report_cpn_higher(n):
    assert hodge_report_for(model_cpn(n)).is_projective_space_diamond()


def test_hodge_report_einstein_family(einstein_family):
    report = hodge_report_for(einstein_family)
    assert np.allclose(ricci_eigenvalues(einstein_family), [6, 6])
    assert not report.theorem_a.satisfied

    entry = report.entries[(1, 0)]
    assert entry.status is HodgeStatus.VANISHES
    assert entry.route == "ricci-1-positive"
    assert report.entries[(2, 0)].route == "ricci-2-positive"

    entry = report.entries[(1, 1)]
    assert entry.status is HodgeStatus.NO_CONCLUSION
    assert entry.route == "none"
    assert entry.margin == pytest.approx(-2.0)


def test_hodge_report_spectrum_only():
    report = hodge_report([-1, -1, 6, 8], 2)
    entry = report.entries[(1, 0)]
    assert entry.status is HodgeStatus.NO_CONCLUSION
    assert entry.route == "none"

    entry = report.entries[(2, 0)]
    assert entry.status is HodgeStatus.VANISHES
    assert entry.route == "scalar-positive"

    positive = hodge_report([1, 2, 3, 4], 2)
    assert positive.entries[(1, 0)].route == "weighted-C^{p,q}"


def test_hodge_report_flat():
    report = hodge_report_for(model_flat(2))
    entry = report.entries[(1, 1)]
    assert entry.status is HodgeStatus.NO_CONCLUSION
    assert entry.boundary
    assert report.all_parallel.satisfied
    assert report.status(2, 2) is HodgeStatus.EQUALS_ONE

    resolved = hodge_report_for(model_flat(2), resolve_boundary=True)
    assert resolved.status(1, 1) is HodgeStatus.PARALLEL_ONLY
    assert resolved.status(1, 0) is HodgeStatus.PARALLEL_ONLY


def test_hodge_report_estimates(cp2):
    report = hodge_report_for(cp2, kappa=-1.0, diameter=2.0)
    entry = report.entries[(1, 0)]
    assert entry.binomial_cap == 2
    assert entry.exponent_argument == pytest.approx(sqrt(12))
    assert entry.estimate_margin == pytest.approx(7.0)
    assert report.total_betti_cap == 16
    assert report.total_betti_exponent_argument == pytest.approx(2.0)
    assert report.total_betti_margin == pytest.approx(5.0)


def test_hodge_report_to_dict(cp2):
    document = hodge_report_for(cp2).to_dict()
    assert len(document["entries"]) == 9
    assert document["entries"][0]["status"] == "EQUALS_ONE"
    assert document["total_betti_cap"] is None


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"spec": [1, 2, 3], "n": 2}, DimensionMismatch),
        ({"spec": [1, 2, 3, 4], "n": 2, "kappa": 1.0}, ValueError),
        ({"spec": [1, 2, 3, 4], "n": 2, "diameter": 1.0}, ValueError),
    ],
)
def test_hodge_report_errors(kwargs, error):
    with pytest.raises(error):
        hodge_report(**kwargs)


@pytest.mark.parametrize("n, p, q", [(3, 2, 1), (4, 2, 2), (4, 3, 1), (5, 3, 2), (5, 4, 1)])
def test_c_pq_k_nondecreasing_in_k(n, p, q):
    values = [c_pq_k(n, p, q, k) for k in range(min(p, q) + 1)]
    values = [value for value in values if value is not None]
    assert values[0] == pytest.approx(c_pq(n, p, q))
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_positive_weighted_sum_gives_projective_diamond(rng, n):
    for _ in range(5):
        R = tune_to_condition(
            random_kahler(n, rng), 3 - 2 / n, margin=float(rng.uniform(0.05, 2.0))
        )
        assert theorem_a_condition(spectrum(R), n).satisfied
        assert hodge_report_for(R).is_projective_space_diamond()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hodge_statuses_are_conjugation_and_serre_symmetric(rng, n):
    reports = [hodge_report_for(random_kahler(n, rng)) for _ in range(3)]
    reports.append(hodge_report(spectrum(random_kahler(n, rng)), n))
    reports.append(
        hodge_report_for(tune_to_condition(random_kahler(n, rng), c_pq(n, 1, 0)))
    )
    for report in reports:
        for p in range(n + 1):
            for q in range(n + 1):
                assert report.status(p, q) is report.status(q, p)
                assert report.status(p, q) is report.status(n - p, n - q)
