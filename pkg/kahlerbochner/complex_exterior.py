"""Complex exterior algebra of R^2n with its standard complex structure.

Forms of bidegree (p, q) are stored as dense complex coefficient vectors over the basis
``dz^I ^ dzbar^J`` where ``I`` and ``J`` are strictly increasing tuples of
0-based indices, ordered lexicographically on ``I`` first and then on ``J``.

The real basis is ordered ``e_1, ..., e_n, f_1, ..., f_n`` with ``f_i = J e_i``
and ``dz^i = dx^i + sqrt(-1) dy^i``.
Basis forms have squared norm ``2**(p + q)`` under the Hermitian inner product.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial

import numpy as np
from attrs import define, field, frozen
from scipy.linalg import null_space, svd

from kahlerbochner.configuration import tolerance
from kahlerbochner.exceptions import DimensionMismatch
from kahlerbochner.logger import kahlerbochner_log

log = kahlerbochner_log(name="kahlerbochner")

RANK_THRESHOLD = tolerance("projector_rank")


@frozen
class ComplexModel:
    """The complex vector space C^n seen as R^2n with its complex structure."""

    n: int = field(converter=int)

    @n.validator
    def _check_n(self, attribute: str, value: int) -> None:
        if value < 1:
            raise DimensionMismatch(f"n must be a positive integer, got {value}.")

    @property
    def real_dim(self) -> int:
        return 2 * self.n

    @property
    def complex_structure(self) -> np.ndarray:
        """Matrix of J in the real basis (e_1..e_n, f_1..f_n)."""
        return complex_structure(self.n)

    def basis(self, p: int, q: int) -> tuple[MultiIndexPair, ...]:
        return basis_enumeration(self.n, p, q)


@frozen
class MultiIndexPair:
    """Holomorphic and antiholomorphic multi-indices of a basis form (0-based)."""

    I: tuple[int, ...] = field(converter=tuple)
    J: tuple[int, ...] = field(converter=tuple)

    @I.validator
    @J.validator
    def _check_increasing(self, attribute, value: tuple[int, ...]) -> None:
        if any(b <= a for a, b in itertools.pairwise(value)):
            raise DimensionMismatch(
                f"{attribute.name} must be strictly increasing, got {value}."
            )

    @property
    def bidegree(self) -> tuple[int, int]:
        return len(self.I), len(self.J)

    def __str__(self) -> str:
        holo = "^".join(f"dz{i + 1}" for i in self.I)
        anti = "^".join(f"dzbar{j + 1}" for j in self.J)
        return "^".join(x for x in (holo, anti) if x) or "1"


def complex_structure(n: int) -> np.ndarray:
    J = np.zeros((2 * n, 2 * n))
    for i in range(n):
        J[n + i, i] = 1.0
        J[i, n + i] = -1.0
    return J


def _check_bidegree(n: int, p: int, q: int) -> None:
    if n < 1:
        raise DimensionMismatch(f"n must be a positive integer, got {n}.")
    if not (0 <= p <= n and 0 <= q <= n):
        raise DimensionMismatch(f"Bidegree ({p}, {q}) out of range for n={n}.")


@lru_cache(maxsize=None)
def basis_enumeration(n: int, p: int, q: int) -> tuple[MultiIndexPair, ...]:
    """List the basis forms of bidegree (p, q) in storage order.

    >>> [str(x) for x in basis_enumeration(2, 1, 1)]
    ['dz1^dzbar1', 'dz1^dzbar2', 'dz2^dzbar1', 'dz2^dzbar2']
    """
    _check_bidegree(n, p, q)
    return tuple(
        MultiIndexPair(I, J)
        for I in itertools.combinations(range(n), p)
        for J in itertools.combinations(range(n), q)
    )


@lru_cache(maxsize=None)
def _basis_index(
    n: int, p: int, q: int
) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    return {(b.I, b.J): idx for idx, b in enumerate(basis_enumeration(n, p, q))}


def form_dimension(n: int, p: int, q: int) -> int:
    return comb(n, p) * comb(n, q)


def _as_coeffs(value) -> np.ndarray:
    coeffs = np.array(value, dtype=complex)
    coeffs.setflags(write=False)
    return coeffs


@define(frozen=True, eq=False)
class PQForm:
    """A complex (p, q)-form on C^n."""

    n: int = field(converter=int)
    p: int = field(converter=int)
    q: int = field(converter=int)
    coeffs: np.ndarray = field(converter=_as_coeffs)

    def __attrs_post_init__(self) -> None:
        _check_bidegree(self.n, self.p, self.q)
        expected = form_dimension(self.n, self.p, self.q)
        if self.coeffs.shape != (expected,):
            raise DimensionMismatch(
                f"A ({self.p}, {self.q})-form on C^{self.n} needs {expected} "
                f"coefficients, got shape {self.coeffs.shape}."
            )

    @classmethod
    def zero(cls, n: int, p: int, q: int) -> PQForm:
        return cls(n, p, q, np.zeros(form_dimension(n, p, q), dtype=complex))

    @classmethod
    def basis_form(cls, n: int, I, J, coefficient: complex = 1.0) -> PQForm:
        """Return ``coefficient * dz^I ^ dzbar^J`` for increasing 0-based I and J."""
        I, J = tuple(I), tuple(J)
        p, q = len(I), len(J)
        _check_bidegree(n, p, q)
        coeffs = np.zeros(form_dimension(n, p, q), dtype=complex)
        try:
            coeffs[_basis_index(n, p, q)[(I, J)]] = coefficient
        except KeyError as exc:
            raise DimensionMismatch(
                f"({I}, {J}) is not a basis index for n={n}."
            ) from exc
        return cls(n, p, q, coeffs)

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.p, self.q

    @property
    def degree(self) -> int:
        return self.p + self.q

    def _check_same_space(self, other: PQForm) -> None:
        if (self.n, self.p, self.q) != (other.n, other.p, other.q):
            raise DimensionMismatch(
                f"Forms live in different spaces: (n, p, q)={(self.n, self.p, self.q)} "
                f"and {(other.n, other.p, other.q)}."
            )

    def with_coeffs(self, coeffs: np.ndarray) -> PQForm:
        return PQForm(self.n, self.p, self.q, coeffs)

    def __add__(self, other: PQForm) -> PQForm:
        self._check_same_space(other)
        return self.with_coeffs(self.coeffs + other.coeffs)

    def __sub__(self, other: PQForm) -> PQForm:
        self._check_same_space(other)
        return self.with_coeffs(self.coeffs - other.coeffs)

    def __neg__(self) -> PQForm:
        return self.with_coeffs(-self.coeffs)

    def __mul__(self, scalar: complex) -> PQForm:
        return self.with_coeffs(complex(scalar) * self.coeffs)

    __rmul__ = __mul__

    def norm_sq(self) -> float:
        return float(hermitian_inner(self, self).real)

    def allclose(self, other: PQForm, atol: float = 1e-10) -> bool:
        self._check_same_space(other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0, atol=atol))

    def __repr__(self) -> str:
        nnz = np.count_nonzero(self.coeffs)
        return f"PQForm(n={self.n}, p={self.p}, q={self.q}, nnz={nnz})"


def dz(n: int, i: int) -> PQForm:
    return PQForm.basis_form(n, (i,), ())


def dzbar(n: int, i: int) -> PQForm:
    return PQForm.basis_form(n, (), (i,))


def one(n: int) -> PQForm:
    return PQForm.basis_form(n, (), ())


def random_form(n: int, p: int, q: int, rng: np.random.Generator) -> PQForm:
    size = form_dimension(n, p, q)
    return PQForm(n, p, q, rng.standard_normal(size) + 1j * rng.standard_normal(size))


def _merge_sign(
    first: tuple[int, ...], second: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    """Sign of the shuffle sorting ``first + second``; 0 if they share an index."""
    if set(first) & set(second):
        return 0, ()
    inversions = sum(1 for a in first for b in second if a > b)
    return (-1) ** inversions, tuple(sorted(first + second))


def _wedge_basis(
    left: tuple[tuple[int, ...], tuple[int, ...]],
    right: tuple[tuple[int, ...], tuple[int, ...]],
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    (I, J), (K, L) = left, right
    sign_holo, IK = _merge_sign(I, K)
    if sign_holo == 0:
        return 0, ((), ())
    sign_anti, JL = _merge_sign(J, L)
    if sign_anti == 0:
        return 0, ((), ())
    # dzbar^J has to cross dz^K
    sign = sign_holo * sign_anti * (-1) ** (len(J) * len(K))
    return sign, (IK, JL)


def wedge(a: PQForm, b: PQForm) -> PQForm:
    """Exterior product of two forms.

    >>> complex(wedge(dz(2, 0), dzbar(2, 0)).coeffs[0])
    (1+0j)
    """
    if a.n != b.n:
        raise DimensionMismatch(f"Cannot wedge forms on C^{a.n} and C^{b.n}.")
    n = a.n
    p, q = a.p + b.p, a.q + b.q
    if p > n or q > n:
        raise DimensionMismatch(f"Bidegree ({p}, {q}) exceeds n={n}.")

    out = np.zeros(form_dimension(n, p, q), dtype=complex)
    index = _basis_index(n, p, q)
    basis_a = basis_enumeration(n, a.p, a.q)
    basis_b = basis_enumeration(n, b.p, b.q)
    for ia in np.flatnonzero(a.coeffs):
        left = (basis_a[ia].I, basis_a[ia].J)
        for ib in np.flatnonzero(b.coeffs):
            sign, target = _wedge_basis(left, (basis_b[ib].I, basis_b[ib].J))
            if sign:
                out[index[target]] += sign * a.coeffs[ia] * b.coeffs[ib]
    return PQForm(n, p, q, out)


def hermitian_inner(a: PQForm, b: PQForm) -> complex:
    """Hermitian inner product, linear in ``a`` and conjugate-linear in ``b``.

    >>> hermitian_inner(dz(1, 0), dz(1, 0))
    (2+0j)
    """
    a._check_same_space(b)
    return complex(2 ** (a.p + a.q) * np.vdot(b.coeffs, a.coeffs))


def kahler_power_coefficient(k: int) -> complex:
    """Coefficient of each ``dz^I ^ dzbar^I`` (|I| = k) in the k-th power of omega."""
    return (1j**k) * factorial(k) / 2**k * (-1) ** (k * (k - 1) // 2)


@lru_cache(maxsize=None)
def _kahler_power_coeffs(n: int, k: int) -> np.ndarray:
    coeffs = np.zeros(form_dimension(n, k, k), dtype=complex)
    index = _basis_index(n, k, k)
    value = kahler_power_coefficient(k)
    for I in itertools.combinations(range(n), k):
        coeffs[index[(I, I)]] = value
    coeffs.setflags(write=False)
    return coeffs


def kahler_power(n: int, k: int) -> PQForm:
    """Return the k-th power of the Kahler form ``omega = sqrt(-1)/2 sum dz^i ^ dzbar^i``.

    :param n: complex dimension
    :type n: int

    :param k: power, ``0 <= k <= n``
    :type k: int

    :raises DimensionMismatch: if k is negative or exceeds n
    """
    if not 0 <= k <= n:
        raise DimensionMismatch(f"omega^{k} is not a form on C^{n}.")
    return PQForm(n, k, k, _kahler_power_coeffs(n, k))


def kahler_form(n: int) -> PQForm:
    return kahler_power(n, 1)


@lru_cache(maxsize=None)
def lefschetz_matrix(n: int, p: int, q: int) -> np.ndarray:
    """Matrix of the map (p, q) -> (p+1, q+1) wedging with omega from the left."""
    _check_bidegree(n, p + 1, q + 1)
    index = _basis_index(n, p + 1, q + 1)
    source = basis_enumeration(n, p, q)
    mat = np.zeros((form_dimension(n, p + 1, q + 1), len(source)), dtype=complex)
    for col, b in enumerate(source):
        for m in range(n):
            sign, target = _wedge_basis(((m,), (m,)), (b.I, b.J))
            if sign:
                mat[index[target], col] += sign * 0.5j
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def lefschetz_dual_matrix(n: int, p: int, q: int) -> np.ndarray:
    """Matrix of the adjoint map (p, q) -> (p-1, q-1).

    Basis norms differ by a factor 4 between the two bidegrees.
    """
    if p < 1 or q < 1:
        raise DimensionMismatch(
            f"The dual Lefschetz map needs p, q >= 1, got ({p}, {q})."
        )
    mat = 4 * lefschetz_matrix(n, p - 1, q - 1).conj().T
    mat.setflags(write=False)
    return mat


def lefschetz(phi: PQForm) -> PQForm:
    if phi.p + 1 > phi.n or phi.q + 1 > phi.n:
        raise DimensionMismatch(
            f"omega ^ phi overflows for bidegree ({phi.p}, {phi.q}) and n={phi.n}."
        )
    mat = lefschetz_matrix(phi.n, phi.p, phi.q)
    return PQForm(phi.n, phi.p + 1, phi.q + 1, mat @ phi.coeffs)


def lefschetz_power(phi: PQForm, k: int) -> PQForm:
    for _ in range(k):
        phi = lefschetz(phi)
    return phi


def lefschetz_dual(phi: PQForm) -> PQForm:
    mat = lefschetz_dual_matrix(phi.n, phi.p, phi.q)
    return PQForm(phi.n, phi.p - 1, phi.q - 1, mat @ phi.coeffs)


def _check_piece(n: int, p: int, q: int, k: int) -> None:
    _check_bidegree(n, p, q)
    if not 0 <= k <= min(p, q):
        raise DimensionMismatch(f"k={k} out of range for bidegree ({p}, {q}).")


def piece_dimension(n: int, p: int, q: int, k: int) -> int:
    """Dimension of the irreducible piece of level k inside the (p, q)-forms."""
    _check_piece(n, p, q, k)
    if p + q - k > n:
        return 0
    a, b = p - k, q - k
    if a == 0 or b == 0:
        return comb(n, a) * comb(n, b)
    return comb(n, a) * comb(n, b) - comb(n, a - 1) * comb(n, b - 1)


@lru_cache(maxsize=None)
def primitive_basis(n: int, p: int, q: int) -> np.ndarray:
    """Orthonormal columns spanning the primitive (p, q)-forms."""
    _check_bidegree(n, p, q)
    if p == 0 or q == 0:
        basis = np.eye(form_dimension(n, p, q), dtype=complex)
    else:
        basis = null_space(lefschetz_dual_matrix(n, p, q), rcond=RANK_THRESHOLD)
    basis.setflags(write=False)
    return basis


def _orthonormal_range(mat: np.ndarray) -> np.ndarray:
    if mat.size == 0:
        return np.zeros((mat.shape[0], 0), dtype=complex)
    u, s, _ = svd(mat, full_matrices=False)
    return u[:, s > RANK_THRESHOLD]


@lru_cache(maxsize=None)
def _piece_range(n: int, p: int, q: int, k: int) -> np.ndarray:
    _check_piece(n, p, q, k)
    expected = piece_dimension(n, p, q, k)
    if expected == 0:
        return np.zeros((form_dimension(n, p, q), 0), dtype=complex)

    image = primitive_basis(n, p - k, q - k)
    for j in range(k):
        image = lefschetz_matrix(n, p - k + j, q - k + j) @ image
    q_mat = _orthonormal_range(image)
    if q_mat.shape[1] != expected:
        log.warning(
            f"Numerical rank {q_mat.shape[1]} of piece (n={n}, p={p}, q={q}, k={k}) "
            f"differs from its dimension {expected}."
        )
    return q_mat


@lru_cache(maxsize=None)
def component_projector(n: int, p: int, q: int, k: int) -> np.ndarray:
    """Orthogonal projector onto the piece ``omega^k ^ (primitive (p-k, q-k)-forms)``.

    :raises DimensionMismatch: if k is not in ``0..min(p, q)``
    """
    q_mat = _piece_range(n, p, q, k)
    proj = q_mat @ q_mat.conj().T
    proj.setflags(write=False)
    return proj


@lru_cache(maxsize=None)
def flag_projector(n: int, p: int, q: int, k: int) -> np.ndarray:
    """Orthogonal projector onto the sum of the pieces of level ``>= k``."""
    _check_piece(n, p, q, k)
    proj = sum(component_projector(n, p, q, j) for j in range(k, min(p, q) + 1))
    proj.setflags(write=False)
    return proj


def project(phi: PQForm, k: int) -> PQForm:
    return phi.with_coeffs(component_projector(phi.n, phi.p, phi.q, k) @ phi.coeffs)


def random_piece_form(n: int, p: int, q: int, k: int, rng: np.random.Generator) -> PQForm:
    return project(random_form(n, p, q, rng), k)


def random_flag_form(n: int, p: int, q: int, k: int, rng: np.random.Generator) -> PQForm:
    phi = random_form(n, p, q, rng)
    return phi.with_coeffs(flag_projector(n, p, q, k) @ phi.coeffs)


def ring_reduce(phi: PQForm) -> PQForm:
    """Remove the component along ``omega^p`` when p == q, identity otherwise."""
    if phi.p != phi.q:
        return phi
    power = kahler_power(phi.n, phi.p)
    factor = hermitian_inner(phi, power) / hermitian_inner(power, power)
    return phi - factor * power


def _covectors(n: int) -> np.ndarray:
    """Rows are the complex covectors of dz^1..dz^n in the real basis."""
    rows = np.zeros((n, 2 * n), dtype=complex)
    for i in range(n):
        rows[i, i] = 1.0
        rows[i, n + i] = 1.0j
    return rows


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def to_alternating_tensor(phi: PQForm) -> np.ndarray:
    """Evaluate phi as an alternating complex multilinear form on R^2n.

    With the determinant convention the entry sum ``sum |T|^2`` equals ``r!`` times
    the squared form norm, r being the total degree.
    """
    n, r = phi.n, phi.degree
    holo = _covectors(n)
    anti = holo.conj()
    basis = basis_enumeration(n, phi.p, phi.q)
    decomposable = np.zeros((2 * n,) * r, dtype=complex)
    for idx in np.flatnonzero(phi.coeffs):
        rows = [holo[i] for i in basis[idx].I] + [anti[j] for j in basis[idx].J]
        term = np.array(phi.coeffs[idx])
        for row in rows:
            term = np.multiply.outer(term, row)
        decomposable += term

    tensor = np.zeros_like(decomposable)
    for perm in itertools.permutations(range(r)):
        tensor += _perm_sign(perm) * np.transpose(decomposable, perm)
    return tensor


def derivation_matrix(n: int, p: int, q: int, holo_matrix: np.ndarray) -> np.ndarray:
    """Matrix on (p, q)-forms of the derivation extending ``dz^i -> sum_j A[j, i] dz^j``.

    The action on ``dzbar^i`` uses the complex conjugate of ``A``.
    """
    holo_part = _derivation_on_indices(n, p, np.asarray(holo_matrix))
    anti_part = _derivation_on_indices(n, q, np.asarray(holo_matrix).conj())
    return np.kron(holo_part, np.eye(comb(n, q))) + np.kron(np.eye(comb(n, p)), anti_part)


def _derivation_on_indices(n: int, degree: int, matrix: np.ndarray) -> np.ndarray:
    subsets = list(itertools.combinations(range(n), degree))
    index = {s: i for i, s in enumerate(subsets)}
    out = np.zeros((len(subsets), len(subsets)), dtype=complex)
    for col, subset in enumerate(subsets):
        for slot, old in enumerate(subset):
            for new in range(n):
                if matrix[new, old] == 0:
                    continue
                if new != old and new in subset:
                    continue
                replaced = subset[:slot] + (new,) + subset[slot + 1 :]
                order = tuple(np.argsort(replaced))
                out[index[tuple(sorted(replaced))], col] += (
                    _perm_sign(order) * matrix[new, old]
                )
    return out
