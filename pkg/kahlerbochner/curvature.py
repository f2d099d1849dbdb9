"""Algebraic Kahler curvature tensors on C^n.

A tensor is stored as a Hermitian form ``herm`` on Sym^2 C^n, written in the
orthonormal basis ``s_ii = E_ii`` and ``s_ik = (E_ik + E_ki) / sqrt(2)`` (i < k,
lexicographic).
With ``d_i = (e_i - sqrt(-1) f_i) / 2`` its complex components are::

    R(d_i, dbar_j, d_k, dbar_l) = - sum_bc herm[b, c] s_b[i, k] s_c[j, l]

so ``herm = Id`` is complex projective space with holomorphic sectional curvature 4.
The real tensor uses the sign where ``R(x, y, x, y)`` is the sectional curvature,
and the operator on u(n) satisfies ``<Op(x ^ y), z ^ w> = R(x, y, z, w)``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import sqrt

import numpy as np
from attrs import define, field, frozen
from scipy.linalg import eigh, lstsq

from kahlerbochner.complex_exterior import complex_structure
from kahlerbochner.configuration import tolerance
from kahlerbochner.exceptions import (
    BianchiViolation,
    DimensionMismatch,
    EigensolverError,
    NonHermitianInput,
    NonSymmetricInput,
    NotKahlerError,
    UnsortedSpectrum,
)
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.unitary_lie import (
    LieElement,
    act_on_curvature,
    hat_norm_sq,
    n2_basis,
    so_basis_matrices,
    tensor_norm_sq,
    u_basis_matrices,
)

log = kahlerbochner_log(name="kahlerbochner")

CONSTRUCTION_TOL = tolerance("construction")
BIANCHI_TOL = tolerance("bianchi")
BACKWARD_ERROR_TOL = tolerance("eigensolver_backward")


def sym2_dimension(n: int) -> int:
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def sym2_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, k) for i in range(n) for k in range(i, n))


@lru_cache(maxsize=None)
def sym2_basis(n: int) -> np.ndarray:
    """Orthonormal basis of symmetric n x n matrices, shape (n(n+1)/2, n, n)."""
    out = np.zeros((sym2_dimension(n), n, n))
    for idx, (i, k) in enumerate(sym2_pairs(n)):
        if i == k:
            out[idx, i, i] = 1.0
        else:
            out[idx, i, k] = out[idx, k, i] = 1 / sqrt(2)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _complex_to_real(n: int) -> np.ndarray:
    """P with ``e_a = d_a + dbar_a`` and ``f_a = sqrt(-1) (d_a - dbar_a)``."""
    P = np.zeros((2 * n, 2 * n), dtype=complex)
    for a in range(n):
        P[a, a] = P[n + a, a] = 1.0
        P[a, n + a] = 1.0j
        P[n + a, n + a] = -1.0j
    return P


@lru_cache(maxsize=None)
def _real_to_complex(n: int) -> np.ndarray:
    """Inverse of P: ``d_a = (e_a - sqrt(-1) f_a) / 2``, ``dbar_a`` its conjugate."""
    Q = np.zeros((2 * n, 2 * n), dtype=complex)
    for a in range(n):
        Q[a, a] = Q[a, n + a] = 0.5
        Q[n + a, a] = -0.5j
        Q[n + a, n + a] = 0.5j
    return Q


def _herm_to_tensor(n: int, herm: np.ndarray) -> np.ndarray:
    s = sym2_basis(n)
    mixed = -np.einsum("bc,bik,cjl->ijkl", herm, s, s)
    Rc = np.zeros((2 * n,) * 4, dtype=complex)
    Rc[:n, n:, :n, n:] = mixed
    Rc[n:, :n, :n, n:] = -mixed.transpose(1, 0, 2, 3)
    Rc[:n, n:, n:, :n] = -mixed.transpose(0, 1, 3, 2)
    Rc[n:, :n, n:, :n] = mixed.transpose(1, 0, 3, 2)
    P = _complex_to_real(n)
    real = np.einsum("abcd,ai,bj,ck,dl->ijkl", Rc, P, P, P, P, optimize=True)
    return np.ascontiguousarray(real.real)


def _tensor_to_herm(n: int, tensor: np.ndarray) -> np.ndarray:
    Q = _real_to_complex(n)
    Rc = np.einsum("abcd,ai,bj,ck,dl->ijkl", tensor, Q, Q, Q, Q, optimize=True)
    mixed = Rc[:n, n:, :n, n:]
    s = sym2_basis(n)
    return -np.einsum("ijkl,bik,cjl->bc", mixed, s, s)


def operator_from_tensor(tensor: np.ndarray, full: bool = False) -> np.ndarray:
    """Matrix of the curvature operator on u(n), or on all 2-forms when ``full``."""
    n = tensor.shape[0] // 2
    W = so_basis_matrices(n) if full else u_basis_matrices(n)
    return 0.25 * np.einsum("Aab,abcd,Bcd->AB", W, tensor, W, optimize=True)


def tensor_from_operator(n: int, matrix: np.ndarray, full: bool = False) -> np.ndarray:
    W = so_basis_matrices(n) if full else u_basis_matrices(n)
    return np.einsum("Aab,AB,Bcd->abcd", W, matrix, W, optimize=True)


def bianchi_defect(R) -> float:
    """Norm of the cyclic sum ``R(x,y,z,w) + R(y,z,x,w) + R(z,x,y,w)`` over the frame."""
    tensor = np.asarray(getattr(R, "tensor", R))
    cyclic = (
        tensor + np.transpose(tensor, (2, 0, 1, 3)) + np.transpose(tensor, (1, 2, 0, 3))
    )
    return float(np.linalg.norm(cyclic))


def _as_herm(value) -> np.ndarray:
    herm = np.array(value, dtype=complex)
    herm.setflags(write=False)
    return herm


@define(frozen=True, eq=False)
class KahlerCurvature:
    """Algebraic Kahler curvature tensor stored as a Hermitian form on Sym^2 C^n.

    The real 4-tensor and the operator matrix on u(n) are computed at construction.

    :raises NonHermitianInput: if ``herm`` is not conjugate-symmetric
    :raises DimensionMismatch: if ``herm`` is not of size n(n+1)/2
    """

    n: int = field(converter=int)
    herm: np.ndarray = field(converter=_as_herm)
    tensor: np.ndarray = field(init=False, repr=False)
    operator_matrix: np.ndarray = field(init=False, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.n < 1:
            raise DimensionMismatch(f"n must be a positive integer, got {self.n}.")
        size = sym2_dimension(self.n)
        if self.herm.shape != (size, size):
            raise DimensionMismatch(
                f"herm must have shape ({size}, {size}) for n={self.n}, "
                f"got {self.herm.shape}."
            )
        defect = float(np.max(np.abs(self.herm - self.herm.conj().T), initial=0.0))
        scale = max(1.0, float(np.max(np.abs(self.herm), initial=0.0)))
        if defect > CONSTRUCTION_TOL * scale:
            raise NonHermitianInput("herm is not Hermitian", defect)

        tensor = _herm_to_tensor(self.n, self.herm)
        tensor.setflags(write=False)
        operator = operator_from_tensor(tensor)
        operator = 0.5 * (operator + operator.T)
        operator.setflags(write=False)
        object.__setattr__(self, "tensor", tensor)
        object.__setattr__(self, "operator_matrix", operator)

    def __add__(self, other: KahlerCurvature) -> KahlerCurvature:
        _check_same_n(self, other)
        return KahlerCurvature(self.n, self.herm + other.herm)

    def __sub__(self, other: KahlerCurvature) -> KahlerCurvature:
        _check_same_n(self, other)
        return KahlerCurvature(self.n, self.herm - other.herm)

    def __mul__(self, scalar: float) -> KahlerCurvature:
        return KahlerCurvature(self.n, float(scalar) * self.herm)

    __rmul__ = __mul__

    def norm_sq(self) -> float:
        """Squared norm, equal to the sum of squared eigenvalues of the operator."""
        return float(16 * np.sum(np.abs(self.herm) ** 2))

    def __call__(self, x, y, z, w) -> float:
        return float(np.einsum("abcd,a,b,c,d->", self.tensor, x, y, z, w))


def _check_same_n(a: KahlerCurvature, b: KahlerCurvature) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"Curvature tensors on C^{a.n} and C^{b.n}.")


def from_hermitian(n: int, herm) -> KahlerCurvature:
    return KahlerCurvature(n, herm)


def to_operator_matrix(R: KahlerCurvature) -> np.ndarray:
    return np.array(R.operator_matrix)


def from_operator_matrix(n: int, matrix) -> KahlerCurvature:
    """Build a curvature tensor from a symmetric matrix on the u(n) basis.

    :raises NonSymmetricInput: if the matrix is not symmetric
    :raises BianchiViolation: if the induced tensor fails the first Bianchi identity
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (n * n, n * n):
        raise DimensionMismatch(
            f"Operator on u({n}) must have shape ({n * n}, {n * n}), got {matrix.shape}."
        )
    asym = float(np.max(np.abs(matrix - matrix.T), initial=0.0))
    if asym > CONSTRUCTION_TOL * max(1.0, float(np.max(np.abs(matrix), initial=0.0))):
        raise NonSymmetricInput("operator matrix is not symmetric", asym)
    return from_tensor(n, tensor_from_operator(n, matrix))


def from_tensor(n: int, tensor) -> KahlerCurvature:
    """Validate a real (2n)^4 tensor and convert it to Hermitian storage.

    :raises BianchiViolation: if the first Bianchi identity fails
    :raises NotKahlerError: if the operator does not vanish outside u(n)
    """
    tensor = np.asarray(tensor, dtype=float)
    if tensor.shape != (2 * n,) * 4:
        raise DimensionMismatch(
            f"Expected a tensor of shape {(2 * n,) * 4}, got {tensor.shape}."
        )
    scale = max(1.0, float(np.linalg.norm(tensor)))
    defect = bianchi_defect(tensor)
    if defect > BIANCHI_TOL * scale:
        raise BianchiViolation("tensor fails the first Bianchi identity", defect)

    full = operator_from_tensor(tensor, full=True)
    outside = float(np.linalg.norm(full[n * n :, :])) if n > 1 else 0.0
    if outside > BIANCHI_TOL * scale:
        raise NotKahlerError(
            f"Curvature operator has a component of norm {outside:.3e} outside u({n})."
        )

    herm = _tensor_to_herm(n, tensor)
    herm = 0.5 * (herm + herm.conj().T)
    R = KahlerCurvature(n, herm)
    mismatch = float(np.linalg.norm(R.tensor - tensor))
    if mismatch > BIANCHI_TOL * scale:
        raise NotKahlerError(f"Tensor is not J-invariant (mismatch {mismatch:.3e}).")
    return R


def ricci(R: KahlerCurvature) -> np.ndarray:
    """Ricci tensor ``Ric(x, y) = sum_a R(x, e_a, y, e_a)``."""
    return np.einsum("iaja->ij", R.tensor)


def scalar(R: KahlerCurvature) -> float:
    return float(np.trace(ricci(R)))


def ricci_form(R: KahlerCurvature) -> np.ndarray:
    """Hermitian matrix ``rho[i, j] = Ric(d_i, dbar_j)``; ``scal = 4 tr rho``."""
    ric = ricci(R)
    n = R.n
    return 0.5 * (ric[:n, :n] + 1j * ric[:n, n:])


def trace_free_ricci(R: KahlerCurvature) -> np.ndarray:
    ric = ricci(R)
    return ric - np.trace(ric) / (2 * R.n) * np.eye(2 * R.n)


def is_einstein(R: KahlerCurvature, tol: float = 1e-9) -> bool:
    ric0 = trace_free_ricci(R)
    return bool(np.linalg.norm(ric0) <= tol * max(1.0, float(np.linalg.norm(ricci(R)))))


def holomorphic_sectional(R: KahlerCurvature, X) -> float:
    X = np.asarray(X, dtype=float)
    JX = complex_structure(R.n) @ X
    return R(X, JX, X, JX) / float(X @ X) ** 2


def orthogonal_bisectional(R: KahlerCurvature, X, Y) -> float:
    """``R(X, JX, Y, JY)`` for unit X and unit Y orthogonal to X and JX."""
    J = complex_structure(R.n)
    X = np.asarray(X, dtype=float)
    X = X / np.linalg.norm(X)
    JX = J @ X
    Y = np.asarray(Y, dtype=float)
    Y = Y - (Y @ X) * X - (Y @ JX) * JX
    norm = np.linalg.norm(Y)
    if norm < 1e-12:
        raise DimensionMismatch("Y lies in the complex line spanned by X.")
    Y = Y / norm
    return R(X, JX, Y, J @ Y)


@frozen
class Spectrum:
    """Ascending eigenvalues of a curvature operator on u(n)."""

    eigenvalues: np.ndarray = field(converter=lambda v: _read_only(np.asarray(v, float)))

    @eigenvalues.validator
    def _check(self, attribute, value: np.ndarray) -> None:
        root = round(sqrt(len(value)))
        if root * root != len(value) or root < 1:
            raise DimensionMismatch(
                f"A spectrum on u(n) has n^2 entries, got {len(value)}."
            )
        if np.any(np.diff(value) < 0):
            raise UnsortedSpectrum("eigenvalues must be sorted ascending.")

    @property
    def n(self) -> int:
        return round(sqrt(len(self.eigenvalues)))

    def partial_sum(self, count: int) -> float:
        return float(np.sum(self.eigenvalues[:count]))

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def tolist(self) -> list[float]:
        return [float(x) for x in self.eigenvalues]

    @classmethod
    def from_values(cls, values) -> Spectrum:
        return cls(np.sort(np.asarray(values, dtype=float)))


def _read_only(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr)
    arr.setflags(write=False)
    return arr


def eigen_decomposition(R: KahlerCurvature) -> tuple[np.ndarray, np.ndarray]:
    matrix = R.operator_matrix
    values, vectors = eigh(matrix)
    scale = max(1.0, float(np.linalg.norm(matrix, 2)))
    columns = np.linalg.norm(matrix @ vectors - vectors * values, axis=0)
    residual = float(np.max(columns, initial=0.0))
    log.debug(f"Eigensolver backward error {residual:.3e}.")
    if residual > BACKWARD_ERROR_TOL * scale:
        raise EigensolverError("Eigensolver backward error above tolerance", residual)
    return values, vectors


def spectrum(R: KahlerCurvature) -> Spectrum:
    """Sorted eigenvalues of the operator on u(n).

    >>> [round(x, 9) for x in spectrum(model_cpn(2)).tolist()]
    [2.0, 2.0, 2.0, 6.0]
    """
    values, _ = eigen_decomposition(R)
    return Spectrum(np.sort(values))


@frozen
class CurvatureDecomposition:
    """Orthogonal splitting ``R = scalar part + R0 + B``."""

    scal: float
    ric0_norm_sq: float
    bochner_norm_sq: float
    r_ring: KahlerCurvature
    scalar_part: KahlerCurvature
    ricci_part: KahlerCurvature
    bochner: KahlerCurvature

    @property
    def r_ring_norm_sq(self) -> float:
        return self.r_ring.norm_sq()

    @property
    def ricci_part_norm_sq(self) -> float:
        return self.ricci_part.norm_sq()

    @property
    def scalar_part_norm_sq(self) -> float:
        return self.scalar_part.norm_sq()


@lru_cache(maxsize=None)
def _ricci_part_basis(n: int) -> np.ndarray:
    """Real coordinates of ``H^h[b, c] = tr(s_b h s_c)`` for trace-free Hermitian h."""
    s = sym2_basis(n)
    generators = []
    for i, j in itertools.product(range(n), repeat=2):
        if i < j:
            for value in (1.0, 1.0j):
                h = np.zeros((n, n), dtype=complex)
                h[i, j] = value
                h[j, i] = np.conj(value)
                generators.append(h)
        elif i == j and i < n - 1:
            h = np.zeros((n, n), dtype=complex)
            h[i, i], h[i + 1, i + 1] = 1.0, -1.0
            generators.append(h)
    columns = []
    for h in generators:
        H = np.einsum("bik,kl,cli->bc", s, h, s)
        columns.append(np.concatenate([H.real.ravel(), H.imag.ravel()]))
    if not columns:
        return np.zeros((2 * sym2_dimension(n) ** 2, 0))
    return np.array(columns).T


def _project_ricci_part(n: int, herm: np.ndarray) -> np.ndarray:
    basis = _ricci_part_basis(n)
    if basis.shape[1] == 0:
        return np.zeros_like(herm)
    target = np.concatenate([herm.real.ravel(), herm.imag.ravel()])
    coeffs, *_ = lstsq(basis, target)
    flat = basis @ coeffs
    size = sym2_dimension(n)
    half = size * size
    return flat[:half].reshape(size, size) + 1j * flat[half:].reshape(size, size)


def decompose(R: KahlerCurvature) -> CurvatureDecomposition:
    """Split R into constant holomorphic sectional, trace-free Ricci and Bochner parts."""
    n = R.n
    size = sym2_dimension(n)
    scalar_herm = np.trace(R.herm).real / size * np.eye(size)
    ring_herm = R.herm - scalar_herm
    ricci_herm = _project_ricci_part(n, ring_herm)
    ricci_herm = 0.5 * (ricci_herm + ricci_herm.conj().T)
    bochner_herm = ring_herm - ricci_herm

    r_ring_tensor = KahlerCurvature(n, ring_herm)
    bochner = KahlerCurvature(n, bochner_herm)
    ric0 = trace_free_ricci(R)
    return CurvatureDecomposition(
        scal=scalar(R),
        ric0_norm_sq=float(np.sum(ric0**2)),
        bochner_norm_sq=bochner.norm_sq(),
        r_ring=r_ring_tensor,
        scalar_part=KahlerCurvature(n, scalar_herm),
        ricci_part=KahlerCurvature(n, ricci_herm),
        bochner=bochner,
    )


def r_ring(R: KahlerCurvature) -> np.ndarray:
    """4-tensor of R minus its constant holomorphic sectional curvature part."""
    return np.array(decompose(R).r_ring.tensor)


def model_flat(n: int) -> KahlerCurvature:
    size = sym2_dimension(n)
    return KahlerCurvature(n, np.zeros((size, size)))


def model_cpn(n: int) -> KahlerCurvature:
    """Complex projective space with holomorphic sectional curvature 4."""
    return KahlerCurvature(n, np.eye(sym2_dimension(n)))


def model_cp_k_flat(n: int, k: int) -> KahlerCurvature:
    """Product of CP^k (holomorphic sectional curvature 4) with flat C^(n-k)."""
    if not 0 <= k <= n:
        raise DimensionMismatch(f"k={k} out of range for n={n}.")
    diag = [1.0 if k_idx < k else 0.0 for _, k_idx in sym2_pairs(n)]
    return KahlerCurvature(n, np.diag(diag))


def model_n2_from_mu(
    mu1_plus: float,
    mu2_plus: float,
    mu3_plus: float,
    mu1_minus: float,
    mu2_minus: float,
    mu3_minus: float,
) -> KahlerCurvature:
    """Curvature on C^2 with an operator diagonal on the self-dual + anti-self-dual basis.

    :raises BianchiViolation: if the self-dual and anti-self-dual traces differ
    :raises NotKahlerError: if the operator does not vanish outside u(2)
    """
    mus = dict(
        zip(
            ("1+", "2+", "3+", "1-", "2-", "3-"),
            (mu1_plus, mu2_plus, mu3_plus, mu1_minus, mu2_minus, mu3_minus),
            strict=True,
        )
    )
    basis = so_basis_matrices(2)
    tensor = np.zeros((4,) * 4)
    for key, element in n2_basis().items():
        W = np.einsum("a,aij->ij", element.coeffs, basis)
        tensor += float(mus[key]) * np.einsum("ab,cd->abcd", W, W)
    return from_tensor(2, tensor)


def model_n2_einstein_family(epsilon: float = 1.0) -> KahlerCurvature:
    """Kahler-Einstein operator on C^2 with spectrum ``-eps, -eps, 6, 6 + 2 eps``.

    ``lambda_1 + lambda_2 < 0`` while the isotropic curvature is negative.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}.")
    return model_n2_from_mu(6.0, 0.0, 0.0, 6.0 + 2 * epsilon, -epsilon, -epsilon)


def model_n2_optimality() -> KahlerCurvature:
    """Einstein operator on C^2 attaining ``|L R|^2 = 8 |L|^2 |R_ring|^2``."""
    return model_n2_from_mu(3.0, 0.0, 0.0, -1.0, 1.0, 3.0)


def _hermitian_sample(size: int, rng: np.random.Generator) -> np.ndarray:
    noise = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
    upper = np.triu(noise, 1)
    return upper + upper.conj().T + np.diag(rng.standard_normal(size))


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_kahler(n: int, seed=0) -> KahlerCurvature:
    """Random tensor with unit normal Hermitian entries from a seeded PCG64 generator."""
    return KahlerCurvature(n, _hermitian_sample(sym2_dimension(n), _as_rng(seed)))


def random_einstein(n: int, seed=0) -> KahlerCurvature:
    """Random Kahler-Einstein tensor: a random tensor minus its trace-free Ricci part."""
    R = random_kahler(n, seed)
    parts = decompose(R)
    return R - parts.ricci_part


@frozen
class IsotropicCurvatures:
    """Curvature components on C^2 in the frame (e1, f1, e2, f2).

    ``combinations`` are ``R1313 + R1414 + R2323 + R2424 + 2 R1234`` evaluated in four
    unitary frames ``(X, JX, Y, JY)``; each equals ``4 R(X, JX, Y, JY)``.
    """

    r1313: float
    r1414: float
    r2323: float
    r2424: float
    r1234: float
    combinations: tuple[float, float, float, float]


N2_FRAMES = (
    np.eye(2, dtype=complex),
    np.array([[1, -1], [1, 1]], dtype=complex) / sqrt(2),
    np.array([[1, 1j], [1j, 1]], dtype=complex) / sqrt(2),
    np.array([[1, 1], [1j, -1j]], dtype=complex) / sqrt(2),
)


def _real_vector(v: np.ndarray) -> np.ndarray:
    return np.concatenate([v.real, v.imag])


def _frame_components(R: KahlerCurvature, frame: list[np.ndarray]) -> dict[str, float]:
    E1, E2, E3, E4 = frame
    return {
        "r1313": R(E1, E3, E1, E3),
        "r1414": R(E1, E4, E1, E4),
        "r2323": R(E2, E3, E2, E3),
        "r2424": R(E2, E4, E2, E4),
        "r1234": R(E1, E2, E3, E4),
    }


def isotropic_curvatures_n2(R: KahlerCurvature) -> IsotropicCurvatures:
    """Components and isotropic curvature combinations of a curvature tensor on C^2."""
    if R.n != 2:
        raise DimensionMismatch(
            f"Isotropic curvatures are only computed for n=2, got n={R.n}."
        )
    J = complex_structure(2)
    combos = []
    base = None
    for unitary in N2_FRAMES:
        X = _real_vector(unitary[:, 0])
        Y = _real_vector(unitary[:, 1])
        comps = _frame_components(R, [X, J @ X, Y, J @ Y])
        if base is None:
            base = comps
        combos.append(
            comps["r1313"] + comps["r1414"] + comps["r2323"] + comps["r2424"]
            + 2 * comps["r1234"]
        )
    return IsotropicCurvatures(**base, combinations=tuple(combos))


def min_orthogonal_bisectional_exact_n2(R: KahlerCurvature) -> float:
    """Minimum of ``R(X, JX, Y, JY)`` on C^2 from the anti-self-dual block.

    On C^2 the anti-self-dual 2-forms span su(2); with ``c1 <= c2 <= c3`` the
    eigenvalues of the compressed operator, the minimum is ``(c1 + c2) / 2``.
    """
    if R.n != 2:
        raise DimensionMismatch(f"Exact minimum is only available for n=2, got n={R.n}.")
    basis = so_basis_matrices(2)
    W = np.array(
        [
            np.einsum("a,aij->ij", n2_basis()[key].coeffs, basis)
            for key in ("1-", "2-", "3-")
        ]
    )
    block = 0.25 * np.einsum("Aab,abcd,Bcd->AB", W, R.tensor, W)
    c = np.sort(np.linalg.eigvalsh(0.5 * (block + block.T)))
    return float(0.5 * (c[0] + c[1]))


def min_orthogonal_bisectional(R: KahlerCurvature, trials: int = 1000, seed=0) -> float:
    """Sampled minimum of the orthogonal bisectional curvature.

    This is an upper bound on the true minimum, reported as "sampled".
    """
    if R.n < 2:
        raise DimensionMismatch("Orthogonal bisectional curvature needs n >= 2.")
    rng = _as_rng(seed)
    best = np.inf
    for _ in range(int(trials)):
        X = rng.standard_normal(2 * R.n)
        Y = rng.standard_normal(2 * R.n)
        try:
            best = min(best, orthogonal_bisectional(R, X, Y))
        except DimensionMismatch:
            continue
    return float(best)


def ring_action_bound(L: LieElement, R: KahlerCurvature) -> tuple[float, float]:
    """Return ``|LR|^2`` and the upper bound ``8 |L|^2 |R_ring|^2``."""
    lhs = tensor_norm_sq(act_on_curvature(L, R))
    return lhs, 8 * L.norm_sq() * decompose(R).r_ring_norm_sq


def einstein_action_bound(L: LieElement, R: KahlerCurvature) -> tuple[float, float]:
    """Return ``|LR|^2`` and the Kahler-Einstein bound ``2/(n+1) |L|^2 |R^u|^2``.

    :raises NotKahlerError: if R is not Einstein
    """
    if not is_einstein(R):
        raise NotKahlerError("The sharper action bound needs a Kahler-Einstein tensor.")
    lhs = tensor_norm_sq(act_on_curvature(L, R))
    return lhs, 2 / (R.n + 1) * L.norm_sq() * hat_norm_sq(R)
