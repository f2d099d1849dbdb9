from __future__ import annotations

from math import sqrt

import numpy as np
import pytest

from kahlerbochner.complex_exterior import (
    dz,
    form_dimension,
    kahler_form,
    kahler_power,
    random_form,
    ring_reduce,
    wedge,
)
from kahlerbochner.curvature import model_cpn, random_kahler
from kahlerbochner.exceptions import DimensionMismatch, NotInUnitaryAlgebra
from kahlerbochner.unitary_lie import (
    LieElement,
    act_on_curvature,
    act_on_form,
    as_endomorphism,
    basis_form_actions,
    basis_labels,
    bracket,
    complex_matrix,
    hat_norm_sq,
    hat_norm_sq_eigenbasis,
    n2_basis,
    random_u_element,
    so_basis,
    so_basis_matrices,
    so_dimension,
    structure_constants,
    u_basis,
)


def test_basis_sizes():
    assert len(u_basis(3)) == 9
    assert len(so_basis(3)) == so_dimension(3) == 15
    assert basis_labels(2) == ("R12", "I12", "I11", "I22", "R12perp", "I12perp")


def test_basis_is_orthonormal():
    mats = so_basis_matrices(3)
    gram = 0.5 * np.einsum("aij,bij->ab", mats, mats)
    assert np.allclose(gram, np.eye(len(mats)))


def test_u_elements_commute_with_complex_structure():
    mats = so_basis_matrices(2)
    J = mats[2] + mats[3]
    for mat in mats[:4]:
        assert np.allclose(mat @ J, J @ mat)
    for mat in mats[4:]:
        assert not np.allclose(mat @ J, J @ mat)


def test_from_matrix(rng):
    L = random_u_element(3, rng)
    back = LieElement.from_matrix(as_endomorphism(L))
    assert np.allclose(back.coeffs, L.coeffs)
    with pytest.raises(DimensionMismatch):
        LieElement.from_matrix(np.zeros((3, 3)))


def test_wrong_size():
    with pytest.raises(DimensionMismatch):
        LieElement(2, np.zeros(4))


def test_bracket_stays_in_u(rng):
    L1, L2 = random_u_element(3, rng), random_u_element(3, rng)
    assert bracket(L1, L2).in_u()
    assert np.allclose(bracket(L1, L1).coeffs, 0)


def test_complex_matrix(rng):
    L = random_u_element(3, rng)
    A = complex_matrix(L)
    assert np.allclose(A, -A.conj().T)
    assert np.sum(np.abs(A) ** 2) == pytest.approx(L.norm_sq())


def test_act_on_form():
    I11 = u_basis(2)[2]
    assert act_on_form(I11, dz(2, 0)).norm_sq() == pytest.approx(2.0)
    assert act_on_form(I11, dz(2, 1)).norm_sq() == pytest.approx(0.0)


def test_act_on_form_outside_u():
    perp = so_basis(2)[-1]
    with pytest.raises(NotInUnitaryAlgebra):
        act_on_form(perp, dz(2, 0))
    with pytest.raises(NotInUnitaryAlgebra):
        act_on_curvature(perp, model_cpn(2))


def test_act_on_form_dimension_mismatch(rng):
    with pytest.raises(DimensionMismatch):
        act_on_form(random_u_element(2, rng), dz(3, 0))


def test_invariant_elements(rng):
    L = random_u_element(3, rng)
    assert act_on_form(L, kahler_form(3)).norm_sq() == pytest.approx(0, abs=1e-20)
    assert np.allclose(act_on_curvature(L, model_cpn(3)), 0, atol=1e-12)
    for k in range(4):
        assert hat_norm_sq(kahler_power(3, k)) == pytest.approx(0, abs=1e-12)


def test_hat_norm_basis_independent(rng):
    R = random_kahler(2, rng)
    phi = random_form(2, 1, 1, rng)
    Q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
    assert hat_norm_sq(R, basis=Q) == pytest.approx(hat_norm_sq(R))
    assert hat_norm_sq(phi, basis=Q) == pytest.approx(hat_norm_sq(phi))


@pytest.mark.parametrize("n", [2, 3])
def test_hat_norm_eigenbasis(rng, n):
    R = random_kahler(n, rng)
    assert hat_norm_sq_eigenbasis(R) == pytest.approx(hat_norm_sq(R), rel=1e-9)


def test_structure_constants_antisymmetric():
    table = structure_constants(2).dense()
    assert np.allclose(table, -np.transpose(table, (1, 0, 2)))
    assert np.allclose(table, -np.transpose(table, (0, 2, 1)))
    assert len(structure_constants(1)) == 0


def test_n2_basis():
    basis = n2_basis()
    s = 1 / sqrt(2)
    assert np.allclose(basis["1+"].u_part, [0, 0, s, s])
    assert np.allclose(basis["1-"].u_part, [0, 0, s, -s])
    assert np.allclose(basis["2-"].u_part, [1, 0, 0, 0])
    assert np.allclose(basis["3-"].u_part, [0, 1, 0, 0])
    for key in ("1+", "1-", "2-", "3-"):
        assert basis[key].in_u()
    for key in ("2+", "3+"):
        assert not basis[key].in_u()


@pytest.mark.parametrize("n, p, q", [(2, 1, 0), (3, 1, 1), (3, 2, 1)])
def test_basis_form_actions(rng, n, p, q):
    mats = basis_form_actions(n, p, q)
    assert mats.shape == (n * n, form_dimension(n, p, q), form_dimension(n, p, q))
    assert not mats.flags.writeable

    L = random_u_element(n, rng)
    phi = random_form(n, p, q, rng)
    expected = np.einsum("a,aij->ij", L.u_part, mats) @ phi.coeffs
    assert np.allclose(act_on_form(L, phi).coeffs, expected)


@pytest.mark.parametrize("degrees", [((1, 0), (0, 1)), ((1, 1), (1, 0)), ((0, 1), (1, 1))])
def test_action_is_a_derivation_of_the_wedge(rng, degrees):
    (p1, q1), (p2, q2) = degrees
    for _ in range(3):
        L = random_u_element(3, rng)
        phi = random_form(3, p1, q1, rng)
        psi = random_form(3, p2, q2, rng)
        lhs = act_on_form(L, wedge(phi, psi))
        rhs = wedge(act_on_form(L, phi), psi) + wedge(phi, act_on_form(L, psi))
        assert lhs.allclose(rhs, atol=1e-9)


@pytest.mark.parametrize("n", [2, 3])
def test_bracket_jacobi_identity(rng, n):
    for _ in range(5):
        L1, L2, L3 = (random_u_element(n, rng) for _ in range(3))
        cyclic = (
            bracket(L1, bracket(L2, L3))
            + bracket(L2, bracket(L3, L1))
            + bracket(L3, bracket(L1, L2))
        )
        assert np.allclose(cyclic.coeffs, 0, atol=1e-10)


@pytest.mark.parametrize("n, p, q", [(2, 1, 1), (3, 1, 1), (3, 2, 2), (3, 2, 1), (3, 1, 0)])
def test_hat_norm_vanishes_with_ring_part(rng, n, p, q):
    phi = random_form(n, p, q, rng)
    assert ring_reduce(phi).norm_sq() > 1e-6
    assert hat_norm_sq(phi) > 1e-6

    invariant = phi - ring_reduce(phi)
    assert ring_reduce(invariant).norm_sq() == pytest.approx(0, abs=1e-20)
    assert hat_norm_sq(invariant) == pytest.approx(0, abs=1e-18)
