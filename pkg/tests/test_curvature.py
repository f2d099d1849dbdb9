from __future__ import annotations

import numpy as np
import pytest

from kahlerbochner import curvature
from kahlerbochner.curvature import (
    KahlerCurvature,
    Spectrum,
    bianchi_defect,
    decompose,
    einstein_action_bound,
    from_operator_matrix,
    from_tensor,
    holomorphic_sectional,
    is_einstein,
    isotropic_curvatures_n2,
    min_orthogonal_bisectional,
    min_orthogonal_bisectional_exact_n2,
    model_cp_k_flat,
    model_cpn,
    model_flat,
    model_n2_einstein_family,
    model_n2_from_mu,
    orthogonal_bisectional,
    random_einstein,
    random_kahler,
    ricci,
    ring_action_bound,
    scalar,
    spectrum,
    to_operator_matrix,
)
from kahlerbochner.exceptions import (
    BianchiViolation,
    DimensionMismatch,
    EigensolverError,
    KahlerCurvatureError,
    NonHermitianInput,
    NonSymmetricInput,
    NotKahlerError,
    UnsortedSpectrum,
)
from kahlerbochner.unitary_lie import (
    act_on_curvature,
    hat_norm_sq,
    n2_basis,
    random_u_element,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cpn_spectrum(n):
    values = spectrum(model_cpn(n)).eigenvalues
    expected = [2.0] * (n * n - 1) + [2.0 * (n + 1)]
    assert np.allclose(values, expected)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cpn_curvatures(n):
    R = model_cpn(n)
    assert scalar(R) == pytest.approx(4 * n * (n + 1))
    assert is_einstein(R)
    X = np.zeros(2 * n)
    X[0] = 3.0
    assert holomorphic_sectional(R, X) == pytest.approx(4.0)


def test_cp2_operator_matrix(cp2):
    expected = np.array(
        [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 4, 2], [0, 0, 2, 4]], dtype=float
    )
    assert np.allclose(to_operator_matrix(cp2), expected)


def test_orthogonal_bisectional(cp2):
    X = np.array([1.0, 0, 0, 0])
    Y = np.array([0.5, 2.0, 0.3, 0])
    assert orthogonal_bisectional(cp2, X, Y) == pytest.approx(2.0)
    with pytest.raises(DimensionMismatch):
        orthogonal_bisectional(cp2, X, np.array([1.0, 0, 2.0, 0]))


def test_min_orthogonal_bisectional(cp2, einstein_family, optimality_example):
    assert min_orthogonal_bisectional_exact_n2(cp2) == pytest.approx(2.0)
    assert min_orthogonal_bisectional_exact_n2(einstein_family) == pytest.approx(-1.0)
    assert min_orthogonal_bisectional_exact_n2(optimality_example) == pytest.approx(0.0)
    value = min_orthogonal_bisectional(model_cpn(3), trials=20, seed=0)
    assert value == pytest.approx(2.0)
    with pytest.raises(DimensionMismatch):
        min_orthogonal_bisectional_exact_n2(model_cpn(3))


def test_sampled_minimum_bounds_exact_from_above(einstein_family):
    exact = min_orthogonal_bisectional_exact_n2(einstein_family)
    sampled = min_orthogonal_bisectional(einstein_family, trials=200, seed=1)
    assert sampled >= exact - 1e-10


def test_norm_is_sum_of_squared_eigenvalues(rng):
    R = random_kahler(3, rng)
    values = spectrum(R).eigenvalues
    assert R.norm_sq() == pytest.approx(float(np.sum(values**2)))


def test_tensor_symmetries(rng):
    R = random_kahler(2, rng)
    T = R.tensor
    assert np.allclose(T, -np.transpose(T, (1, 0, 2, 3)))
    assert np.allclose(T, np.transpose(T, (2, 3, 0, 1)))
    assert bianchi_defect(R) < 1e-10


def test_from_tensor(rng):
    R = random_kahler(3, rng)
    assert np.allclose(from_tensor(3, R.tensor).herm, R.herm)
    assert np.allclose(from_operator_matrix(3, R.operator_matrix).herm, R.herm)


def test_arithmetic(rng):
    R = random_kahler(2, rng)
    S = model_cpn(2)
    assert np.allclose((R + 2 * S - R).herm, 2 * S.herm)
    with pytest.raises(DimensionMismatch):
        R + model_cpn(3)


def test_construction_errors():
    with pytest.raises(DimensionMismatch):
        KahlerCurvature(2, np.eye(2))

    herm = np.zeros((3, 3), dtype=complex)
    herm[0, 1] = herm[1, 0] = 1j
    with pytest.raises(NonHermitianInput):
        KahlerCurvature(2, herm)

    asym = np.zeros((4, 4))
    asym[0, 1] = 1.0
    with pytest.raises(NonSymmetricInput):
        from_operator_matrix(2, asym)

    with pytest.raises(BianchiViolation):
        from_operator_matrix(2, np.diag([1.0, 0, 0, 0]))


def test_real_space_form_is_not_kahler():
    g = np.eye(4)
    tensor = np.einsum("ac,bd->abcd", g, g) - np.einsum("ad,bc->abcd", g, g)
    with pytest.raises(NotKahlerError):
        from_tensor(2, tensor)


def test_spectrum_validation():
    with pytest.raises(DimensionMismatch):
        Spectrum(np.array([1.0, 2.0, 3.0]))
    with pytest.raises(UnsortedSpectrum):
        Spectrum(np.array([2.0, 1.0, 3.0, 4.0]))
    spec = Spectrum.from_values([8, -1, 6, -1])
    assert spec.tolist() == [-1.0, -1.0, 6.0, 8.0]
    assert spec.n == 2
    assert spec.partial_sum(2) == -2.0


@pytest.mark.parametrize("epsilon", [0.5, 1.0, 3.0])
def test_einstein_family(epsilon):
    R = model_n2_einstein_family(epsilon)
    assert np.allclose(
        spectrum(R).eigenvalues, [-epsilon, -epsilon, 6, 6 + 2 * epsilon], atol=1e-10
    )
    assert is_einstein(R)
    iso = isotropic_curvatures_n2(R)
    assert iso.r1313 == pytest.approx(-epsilon / 2)
    assert iso.r1414 == pytest.approx(-epsilon / 2)
    assert iso.r2323 == pytest.approx(-epsilon / 2)
    assert iso.r2424 == pytest.approx(-epsilon / 2)
    assert iso.r1234 == pytest.approx(-epsilon)
    assert iso.combinations[0] == pytest.approx(-4 * epsilon)


def test_einstein_family_needs_positive_epsilon():
    with pytest.raises(ValueError):
        model_n2_einstein_family(0.0)


def test_unbalanced_traces():
    with pytest.raises(BianchiViolation):
        model_n2_from_mu(1.0, 0, 0, 0, 0, 0)


def test_isotropic_only_n2():
    with pytest.raises(DimensionMismatch):
        isotropic_curvatures_n2(model_cpn(3))


def test_optimality_example(optimality_example):
    R = optimality_example
    assert np.allclose(spectrum(R).eigenvalues, [-1, 1, 3, 3], atol=1e-10)
    assert decompose(R).r_ring_norm_sq == pytest.approx(8.0)
    assert hat_norm_sq(R) == pytest.approx(96.0)
    lhs, bound = ring_action_bound(n2_basis()["2-"], R)
    assert lhs == pytest.approx(64.0)
    assert bound == pytest.approx(64.0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_decomposition(rng, n):
    R = random_kahler(n, rng)
    parts = decompose(R)
    total = parts.scalar_part_norm_sq + parts.ricci_part_norm_sq + parts.bochner_norm_sq
    assert total == pytest.approx(R.norm_sq())
    assert np.allclose(ricci(parts.bochner), 0, atol=1e-9)
    assert parts.ricci_part_norm_sq == pytest.approx(2 / (n + 2) * parts.ric0_norm_sq)
    assert parts.scal == pytest.approx(scalar(R))


def test_decomposition_of_models():
    parts = decompose(model_cpn(3))
    assert parts.r_ring_norm_sq == pytest.approx(0, abs=1e-20)
    assert parts.scal == pytest.approx(48.0)

    parts = decompose(model_cp_k_flat(2, 1))
    assert parts.scal == pytest.approx(8.0)
    assert parts.ric0_norm_sq == pytest.approx(16.0)
    assert parts.ricci_part_norm_sq == pytest.approx(8.0)
    assert not is_einstein(model_cp_k_flat(2, 1))


@pytest.mark.parametrize(
    "n, k", [(2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4)]
)
def test_cp_k_flat_hat_norm(n, k):
    assert hat_norm_sq(model_cp_k_flat(n, k)) == pytest.approx(32 * k * (k + 1) * (n - k))


def test_cp_k_flat_range():
    with pytest.raises(DimensionMismatch):
        model_cp_k_flat(2, 3)


def test_action_bounds(rng):
    R = random_einstein(3, rng)
    assert is_einstein(R)
    for _ in range(5):
        L = random_u_element(3, rng)
        lhs, bound = einstein_action_bound(L, R)
        assert lhs <= bound * (1 + 1e-9)
        lhs, bound = ring_action_bound(L, R)
        assert lhs <= bound * (1 + 1e-9)


def test_einstein_action_bound_needs_einstein(rng):
    with pytest.raises(NotKahlerError):
        einstein_action_bound(random_u_element(2, rng), model_cp_k_flat(2, 1))


def test_flat():
    R = model_flat(2)
    assert R.norm_sq() == 0
    assert is_einstein(R)


def test_unsorted_spectrum_is_a_curvature_error():
    with pytest.raises(KahlerCurvatureError):
        Spectrum([3.0, 1.0, 2.0, 0.0])


def test_eigensolver_backward_error(monkeypatch, cp2):
    def inaccurate_eigh(matrix):
        return np.zeros(len(matrix)), np.eye(len(matrix))

    monkeypatch.setattr(curvature, "eigh", inaccurate_eigh)
    with pytest.raises(EigensolverError) as exc:
        spectrum(cp2)
    assert exc.value.defect > 1.0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ricci_bounded_below_by_lowest_eigenvalues(rng, n):
    for _ in range(10):
        R = random_kahler(n, rng)
        bound = spectrum(R).partial_sum(n)
        lowest_ricci = np.linalg.eigvalsh(ricci(R))[0]
        assert lowest_ricci >= bound - 1e-9 * max(1.0, abs(bound))


def test_two_positive_operator_has_positive_isotropic_curvature(rng):
    for _ in range(20):
        R = random_kahler(2, rng)
        deficit = max(0.0, -spectrum(R).partial_sum(2))
        # R_CPn >= 2 Id lifts lambda_1 + lambda_2 by at least deficit + 1
        R = R + (deficit + 1.0) / 4 * model_cpn(2)
        assert spectrum(R).partial_sum(2) > 0
        assert min(isotropic_curvatures_n2(R).combinations) > 0
        assert min_orthogonal_bisectional_exact_n2(R) > 0


@pytest.mark.parametrize("n", [2, 3])
def test_action_on_curvature_keeps_bianchi(rng, n):
    R = random_kahler(n, rng)
    for _ in range(3):
        image = act_on_curvature(random_u_element(n, rng), R)
        scale = max(1.0, float(np.max(np.abs(image))))
        assert bianchi_defect(image) < 1e-10 * scale
