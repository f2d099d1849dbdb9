"""The unitary Lie algebra u(n) inside so(2n), identified with 2-forms on R^2n.

A 2-form ``x ^ y`` acts on vectors by ``z -> g(y, z) x - g(x, z) y``; its matrix is
``x y^T - y x^T`` which is also its coefficient matrix as a 2-form.
The inner product of 2-forms is ``<A, B> = tr(A^T B) / 2``.

The ordered orthonormal basis of 2-forms is::

    R_ij (i < j), I_ij (i < j), I_ii, R_ij^perp (i < j), I_ij^perp (i < j)

where the first ``n**2`` elements span u(n).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import sqrt

import numpy as np
from attrs import define, field
from scipy.linalg import eigh

from kahlerbochner.complex_exterior import PQForm, derivation_matrix
from kahlerbochner.configuration import tolerance
from kahlerbochner.exceptions import DimensionMismatch, NotInUnitaryAlgebra

UNITARY_TOL = tolerance("construction")


def _as_real(value) -> np.ndarray:
    coeffs = np.array(value, dtype=float)
    coeffs.setflags(write=False)
    return coeffs


def so_dimension(n: int) -> int:
    return n * (2 * n - 1)


def _wedge_matrix(dim: int, a: int, b: int) -> np.ndarray:
    mat = np.zeros((dim, dim))
    mat[a, b] += 1.0
    mat[b, a] -= 1.0
    return mat


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def basis_labels(n: int) -> tuple[str, ...]:
    """Human readable 1-based labels of the ordered 2-form basis."""
    pairs = _pairs(n)
    return tuple(
        [f"R{i + 1}{j + 1}" for i, j in pairs]
        + [f"I{i + 1}{j + 1}" for i, j in pairs]
        + [f"I{i + 1}{i + 1}" for i in range(n)]
        + [f"R{i + 1}{j + 1}perp" for i, j in pairs]
        + [f"I{i + 1}{j + 1}perp" for i, j in pairs]
    )


@lru_cache(maxsize=None)
def so_basis_matrices(n: int) -> np.ndarray:
    """Skew matrices of the ordered orthonormal 2-form basis, shape (n(2n-1), 2n, 2n)."""
    if n < 1:
        raise DimensionMismatch(f"n must be a positive integer, got {n}.")
    dim = 2 * n

    def e(i: int) -> int:
        return i

    def f(i: int) -> int:
        return n + i

    pairs = _pairs(n)
    mats = []
    for i, j in pairs:
        mats.append(
            (_wedge_matrix(dim, e(i), e(j)) + _wedge_matrix(dim, f(i), f(j))) / sqrt(2)
        )
    for i, j in pairs:
        mats.append(
            (_wedge_matrix(dim, e(i), f(j)) + _wedge_matrix(dim, e(j), f(i))) / sqrt(2)
        )
    mats.extend(_wedge_matrix(dim, e(i), f(i)) for i in range(n))
    for i, j in pairs:
        mats.append(
            (_wedge_matrix(dim, e(i), e(j)) - _wedge_matrix(dim, f(i), f(j))) / sqrt(2)
        )
    for i, j in pairs:
        mats.append(
            (_wedge_matrix(dim, e(i), f(j)) - _wedge_matrix(dim, e(j), f(i))) / sqrt(2)
        )
    out = np.array(mats)
    out.setflags(write=False)
    return out


def u_basis_matrices(n: int) -> np.ndarray:
    return so_basis_matrices(n)[: n * n]


@define(frozen=True, eq=False)
class LieElement:
    """A real 2-form on R^2n given by its coefficients in the ordered basis."""

    n: int = field(converter=int)
    coeffs: np.ndarray = field(converter=_as_real)

    def __attrs_post_init__(self) -> None:
        if self.coeffs.shape != (so_dimension(self.n),):
            raise DimensionMismatch(
                f"A 2-form on R^{2 * self.n} needs {so_dimension(self.n)} "
                f"coefficients, got shape {self.coeffs.shape}."
            )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> LieElement:
        """Pull a skew matrix back to 2-form coordinates."""
        matrix = np.asarray(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise DimensionMismatch(f"Expected a square even matrix, got {matrix.shape}.")
        n = matrix.shape[0] // 2
        basis = so_basis_matrices(n)
        return cls(n, 0.5 * np.einsum("aij,ij->a", basis, matrix))

    @classmethod
    def from_u(cls, n: int, u_coeffs) -> LieElement:
        coeffs = np.zeros(so_dimension(n))
        coeffs[: n * n] = u_coeffs
        return cls(n, coeffs)

    @property
    def u_part(self) -> np.ndarray:
        return self.coeffs[: self.n * self.n]

    @property
    def perp_part(self) -> np.ndarray:
        return self.coeffs[self.n * self.n :]

    def in_u(self, tol: float = UNITARY_TOL) -> bool:
        return bool(np.linalg.norm(self.perp_part) <= tol * max(1.0, self.norm()))

    def norm_sq(self) -> float:
        return float(self.coeffs @ self.coeffs)

    def norm(self) -> float:
        return sqrt(self.norm_sq())

    def __add__(self, other: LieElement) -> LieElement:
        return LieElement(self.n, self.coeffs + other.coeffs)

    def __sub__(self, other: LieElement) -> LieElement:
        return LieElement(self.n, self.coeffs - other.coeffs)

    def __mul__(self, scalar: float) -> LieElement:
        return LieElement(self.n, float(scalar) * self.coeffs)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        u_norm = np.linalg.norm(self.u_part)
        perp_norm = np.linalg.norm(self.perp_part)
        return f"LieElement(n={self.n}, |u|={u_norm:.3g}, |perp|={perp_norm:.3g})"


def _one_hot(n: int, idx: int) -> LieElement:
    coeffs = np.zeros(so_dimension(n))
    coeffs[idx] = 1.0
    return LieElement(n, coeffs)


def u_basis(n: int) -> tuple[LieElement, ...]:
    """Orthonormal basis of u(n): R_ij, then I_ij, then I_ii.

    >>> len(u_basis(3))
    9
    """
    return tuple(_one_hot(n, idx) for idx in range(n * n))


def so_basis(n: int) -> tuple[LieElement, ...]:
    return tuple(_one_hot(n, idx) for idx in range(so_dimension(n)))


def random_u_element(n: int, rng: np.random.Generator) -> LieElement:
    return LieElement.from_u(n, rng.standard_normal(n * n))


def as_endomorphism(L: LieElement) -> np.ndarray:
    """Skew-symmetric matrix of L acting on R^2n."""
    return np.einsum("a,aij->ij", L.coeffs, so_basis_matrices(L.n))


def bracket(L1: LieElement, L2: LieElement) -> LieElement:
    if L1.n != L2.n:
        raise DimensionMismatch(
            f"Cannot bracket elements of so({2 * L1.n}) and so({2 * L2.n})."
        )
    m1, m2 = as_endomorphism(L1), as_endomorphism(L2)
    return LieElement.from_matrix(m1 @ m2 - m2 @ m1)


def _dz_columns(n: int) -> np.ndarray:
    cols = np.zeros((2 * n, n), dtype=complex)
    for i in range(n):
        cols[i, i] = 1.0
        cols[n + i, i] = 1.0j
    return cols


def complex_matrix(L: LieElement) -> np.ndarray:
    """Matrix A with ``L dz^i = sum_j A[j, i] dz^j`` for L in u(n).

    A is anti-Hermitian and ``|A|_F^2 = |L|^2``.
    """
    _require_u(L)
    cols = _dz_columns(L.n)
    return 0.5 * cols.conj().T @ as_endomorphism(L) @ cols


def _require_u(L: LieElement) -> None:
    if not L.in_u():
        raise NotInUnitaryAlgebra(
            f"Element has a component of norm {np.linalg.norm(L.perp_part):.3e} "
            "outside u(n)."
        )


@lru_cache(maxsize=None)
def basis_form_actions(n: int, p: int, q: int) -> np.ndarray:
    """Matrices of the orthonormal basis elements of u(n) acting on (p, q)-forms.

    Read-only array of shape ``(n^2, dim, dim)`` with ``dim`` the number of
    (p, q) coefficients; entry ``a`` is the action of the a-th basis element.
    """
    cols = _dz_columns(n)
    mats = []
    for mat in u_basis_matrices(n):
        holo = 0.5 * cols.conj().T @ mat @ cols
        mats.append(derivation_matrix(n, p, q, holo))
    out = np.array(mats)
    out.setflags(write=False)
    return out


def act_on_form(L: LieElement, phi: PQForm) -> PQForm:
    """Derivation action of L in u(n) on a (p, q)-form.

    :raises NotInUnitaryAlgebra: if L has a component outside u(n)
    :raises DimensionMismatch: if L and phi live on different spaces
    """
    if L.n != phi.n:
        raise DimensionMismatch(
            f"Element of so({2 * L.n}) cannot act on forms over C^{phi.n}."
        )
    _require_u(L)
    mats = basis_form_actions(phi.n, phi.p, phi.q)
    action = np.einsum("a,aij->ij", L.u_part, mats)
    return phi.with_coeffs(action @ phi.coeffs)


def act_on_curvature(L: LieElement, R) -> np.ndarray:
    """Derivation action of L in u(n) on a 4-tensor.

    ``R`` is a KahlerCurvature (its ``tensor`` is used) or a raw (2n)^4 array.
    """
    tensor = np.asarray(getattr(R, "tensor", R))
    if L.n * 2 != tensor.shape[0]:
        raise DimensionMismatch(
            f"Element of so({2 * L.n}) cannot act on a tensor of shape {tensor.shape}."
        )
    _require_u(L)
    M = as_endomorphism(L)
    return -(
        np.einsum("ma,mbcd->abcd", M, tensor)
        + np.einsum("mb,amcd->abcd", M, tensor)
        + np.einsum("mc,abmd->abcd", M, tensor)
        + np.einsum("md,abcm->abcd", M, tensor)
    )


def tensor_norm_sq(tensor: np.ndarray) -> float:
    """Squared norm of a 4-tensor with the sums over ``a < b`` and ``c < d``."""
    return float(0.25 * np.sum(np.abs(tensor) ** 2))


def hat_norm_sq(T, basis: np.ndarray | None = None) -> float:
    """Sum over an orthonormal basis of u(n) of the squared norms of the actions on T.

    :param T: a PQForm, a KahlerCurvature or a raw 4-tensor
    :param basis: optional (n^2, n^2) orthogonal matrix recombining the standard basis
    """
    if isinstance(T, PQForm):
        n = T.n
        elements = np.eye(n * n) if basis is None else np.asarray(basis)
        mats = basis_form_actions(n, T.p, T.q)
        total = 0.0
        for row in elements:
            image = T.with_coeffs(np.einsum("a,aij->ij", row, mats) @ T.coeffs)
            total += image.norm_sq()
        return float(total)

    tensor = np.asarray(getattr(T, "tensor", T))
    n = tensor.shape[0] // 2
    elements = np.eye(n * n) if basis is None else np.asarray(basis)
    return float(
        sum(
            tensor_norm_sq(act_on_curvature(LieElement.from_u(n, row), tensor))
            for row in elements
        )
    )


@define(frozen=True, eq=False)
class StructureConstants:
    """Sparse table ``c[gamma, alpha, beta] = <[X_gamma, X_alpha], X_beta>`` on u(n)."""

    n: int
    indices: np.ndarray
    values: np.ndarray

    def dense(self) -> np.ndarray:
        size = self.n * self.n
        table = np.zeros((size, size, size))
        if len(self.values):
            table[tuple(self.indices.T)] = self.values
        return table

    def ad_matrix(self, L: LieElement) -> np.ndarray:
        """Matrix X with ``L X_alpha = sum_beta X[beta, alpha] X_beta``."""
        _require_u(L)
        return np.einsum("g,gab->ba", L.u_part, self.dense())

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def structure_constants(n: int, tol: float = 1e-14) -> StructureConstants:
    mats = u_basis_matrices(n)
    commutators = np.einsum("gij,ajk->gaik", mats, mats) - np.einsum(
        "aij,gjk->gaik", mats, mats
    )
    table = 0.5 * np.einsum("gaik,bik->gab", commutators, mats)
    indices = np.argwhere(np.abs(table) > tol)
    values = table[tuple(indices.T)]
    indices.setflags(write=False)
    values.setflags(write=False)
    return StructureConstants(n, indices, values)


def _eigenbasis(R) -> tuple[np.ndarray, np.ndarray]:
    return eigh(np.asarray(R.operator_matrix))


def action_norm_sq_eigenbasis(L: LieElement, R) -> float:
    """Squared norm of ``L R`` from the spectrum of R and structure constants."""
    lam, vecs = _eigenbasis(R)
    ad = structure_constants(L.n).ad_matrix(L)
    rotated = vecs.T @ ad @ vecs
    gaps = lam[:, None] - lam[None, :]
    return float(np.sum(gaps**2 * rotated**2))


def hat_norm_sq_eigenbasis(R) -> float:
    """Hat norm of a curvature operator from its spectrum and structure constants."""
    lam, vecs = _eigenbasis(R)
    table = structure_constants(R.n).dense()
    gaps = (lam[:, None] - lam[None, :]) ** 2
    total = 0.0
    for ad_transposed in table:
        rotated = vecs.T @ ad_transposed.T @ vecs
        total += float(np.sum(gaps * rotated**2))
    return total


def two_form(n: int, terms: list[tuple[float, int, int]]) -> LieElement:
    """Build ``sum c * E_a ^ E_b`` from (c, a, b) triples of real 0-based indices."""
    dim = 2 * n
    mat = np.zeros((dim, dim))
    for coefficient, a, b in terms:
        mat += coefficient * _wedge_matrix(dim, a, b)
    return LieElement.from_matrix(mat)


# real frame (E1, E2, E3, E4) = (e1, f1, e2, f2)
N2_FRAME = (0, 2, 1, 3)


@lru_cache(maxsize=1)
def n2_basis() -> dict[str, LieElement]:
    """Self-dual and anti-self-dual basis of 2-forms on R^4 = C^2.

    Keys ``1+, 2+, 3+, 1-, 2-, 3-``; ``1+`` is omega/sqrt(2) and the four elements
    ``1+, 1-, 2-, 3-`` span u(2).
    """
    E1, E2, E3, E4 = N2_FRAME
    s = 1 / sqrt(2)
    out = {}
    for sign, label in ((1.0, "+"), (-1.0, "-")):
        out[f"1{label}"] = two_form(2, [(s, E1, E2), (sign * s, E3, E4)])
        out[f"2{label}"] = two_form(2, [(s, E1, E3), (sign * s, E4, E2)])
        out[f"3{label}"] = two_form(2, [(s, E1, E4), (sign * s, E2, E3)])
    return {key: out[key] for key in ("1+", "2+", "3+", "1-", "2-", "3-")}
