"""Torus characters of the U(n) representations on (p, q)-forms."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np
from attrs import field, frozen

from kahlerbochner.configuration import tolerance
from kahlerbochner.exceptions import DimensionMismatch, NearSingularTorusPoint


def _as_torus_array(value) -> np.ndarray:
    arr = np.array(value, dtype=complex).reshape(-1)
    arr.setflags(write=False)
    return arr


@frozen(eq=False)
class TorusPoint:
    """``diag(eps_1, ..., eps_n)`` in the maximal torus of U(n).

    :raises NearSingularTorusPoint: if an entry is off the unit circle
    """

    eps: np.ndarray = field(converter=_as_torus_array)

    @eps.validator
    def _check_unit(self, attribute, value: np.ndarray) -> None:
        if value.size == 0:
            raise DimensionMismatch("A torus point needs at least one entry.")
        defect = float(np.max(np.abs(np.abs(value) - 1)))
        if defect > tolerance("torus_unit_modulus"):
            raise NearSingularTorusPoint(
                f"Entries are not unit modulus (defect={defect:.3e})."
            )

    @classmethod
    def from_angles(cls, angles) -> TorusPoint:
        return cls(np.exp(1j * np.asarray(angles, dtype=float)))

    @property
    def n(self) -> int:
        return int(self.eps.size)

    @property
    def separation(self) -> float:
        if self.n < 2:
            return np.inf
        diffs = np.abs(self.eps[:, None] - self.eps[None, :])
        return float(np.min(diffs[np.triu_indices(self.n, 1)]))

    def check_separated(self) -> None:
        """:raises NearSingularTorusPoint: if two entries are closer than the floor"""
        floor_ = tolerance("torus_separation")
        if self.separation < floor_:
            raise NearSingularTorusPoint(
                f"Torus point entries closer than {floor_} "
                f"(separation={self.separation:.3e})."
            )


def _eps(point) -> np.ndarray:
    if isinstance(point, TorusPoint):
        return point.eps
    return TorusPoint(point).eps


def random_torus_point(n: int, rng: np.random.Generator) -> TorusPoint:
    """Uniform angles, resampled until the entries are separated."""
    floor_ = tolerance("torus_separation")
    while True:
        point = TorusPoint.from_angles(rng.uniform(0, 2 * np.pi, size=n))
        if point.separation >= floor_:
            return point


def elementary_symmetric(point, k: int) -> complex:
    """k-th elementary symmetric polynomial; 0 for k < 0 and k > n.

    >>> elementary_symmetric([1, 1, 1], 2)
    (3+0j)
    """
    eps = _eps(point)
    if k < 0 or k > eps.size:
        return 0j
    coefficients = np.poly(eps)
    return complex((-1) ** k * coefficients[k])


def chi_pq(point, p: int, q: int) -> complex:
    """Character of the (p, q)-forms: ``sigma_p(eps) * conj(sigma_q(eps))``."""
    return elementary_symmetric(point, p) * np.conj(elementary_symmetric(point, q))


def _check_degrees(n: int, p: int, q: int, k: int | None = None) -> None:
    if not (0 <= p <= n and 0 <= q <= n):
        raise DimensionMismatch(f"Bidegree ({p}, {q}) out of range for n={n}.")
    if k is not None and not 0 <= k <= min(p, q):
        raise DimensionMismatch(f"k={k} out of range for bidegree ({p}, {q}).")


def chi_pq_k(point, p: int, q: int, k: int) -> complex:
    """Character of the piece ``L^k P^{p-k, q-k}``, zero when ``p + q - k > n``."""
    eps = _eps(point)
    n = eps.size
    _check_degrees(n, p, q, k)
    if p + q - k > n:
        return 0j
    a, b = p - k, q - k
    return chi_pq(eps, a, b) - chi_pq(eps, a - 1, b - 1)


def dim_pqk(n: int, p: int, q: int, k: int) -> int:
    """Dimension of the level-k piece of the (p, q)-forms.

    >>> dim_pqk(3, 1, 1, 0)
    8
    """
    _check_degrees(n, p, q, k)
    if p + q - k > n:
        return 0
    a, b = p - k, q - k
    value = comb(n, a) * comb(n, b)
    if a > 0 and b > 0:
        value -= comb(n, a - 1) * comb(n, b - 1)
    return max(value, 0)


def chi_pq_disjoint_expansion(point, p: int, q: int) -> complex:
    """``sum_k C(n - (p+q-2k), k) sum_{I, J disjoint} eps_I conj(eps_J)``."""
    eps = _eps(point)
    n = eps.size
    _check_degrees(n, p, q)
    total = 0j
    for k in range(min(p, q) + 1):
        top = n - (p + q - 2 * k)
        if top < 0:
            continue
        inner = 0j
        for I in itertools.combinations(range(n), p - k):
            rest = [j for j in range(n) if j not in I]
            eps_I = np.prod(eps[list(I)]) if I else 1.0
            for J in itertools.combinations(rest, q - k):
                inner += eps_I * np.conj(np.prod(eps[list(J)]) if J else 1.0)
        total += comb(top, k) * inner
    return complex(total)


def alternant(exponents, point) -> complex:
    """``det[eps_i ** l_j]``."""
    eps = _eps(point)
    exponents = np.asarray(exponents, dtype=int)
    if exponents.size != eps.size:
        raise DimensionMismatch(
            f"{exponents.size} exponents for a point of size {eps.size}."
        )
    return complex(np.linalg.det(eps[:, None] ** exponents[None, :]))


def vandermonde(point) -> complex:
    """``Delta = alternant((n-1, ..., 0)) = prod_{i<j} (eps_i - eps_j)``."""
    eps = _eps(point)
    return alternant(np.arange(eps.size - 1, -1, -1), eps)


def _separated(point) -> TorusPoint:
    point = point if isinstance(point, TorusPoint) else TorusPoint(point)
    point.check_separated()
    return point


def weyl_character(signature, point) -> complex:
    """Weyl character formula for the highest weight ``f_1 >= ... >= f_n``."""
    point = _separated(point)
    f = np.asarray(signature, dtype=int)
    n = point.n
    if f.size != n:
        raise DimensionMismatch(f"Signature of length {f.size} for n={n}.")
    if np.any(np.diff(f) > 0):
        raise ValueError(f"Signature {tuple(f)} is not non-increasing.")
    shifted = f + np.arange(n - 1, -1, -1)
    return alternant(shifted, point) / vandermonde(point)


def weyl_signature(n: int, p: int, q: int, k: int) -> tuple[int, ...]:
    """Highest weight of ``P^{p-k, q-k}``: p-k ones, then zeros, then q-k minus ones.

    >>> weyl_signature(4, 2, 1, 0)
    (1, 1, 0, -1)
    """
    _check_degrees(n, p, q, k)
    a, b = p - k, q - k
    if a + b > n:
        raise DimensionMismatch(f"No signature for ({p}, {q}, {k}) at n={n}.")
    return (1,) * a + (0,) * (n - a - b) + (-1,) * b


def _tau_sigma(eps: np.ndarray, a: int, b: int) -> complex:
    n = eps.size
    sigma = [elementary_symmetric(eps, j) for j in range(n + 2)]

    def s(j: int) -> complex:
        return sigma[j] if 0 <= j <= n else 0j

    return s(n - a + 1) * s(n - b) - s(n - a) * s(n - b + 1)


def _tau_alternant(point: TorusPoint, a: int, b: int) -> complex:
    if a == b:
        return 0j
    n = point.n
    high, low = max(a, b), min(a, b)
    exponents = [e for e in range(n + 1, -1, -1) if e not in (high, low)]
    value = alternant(exponents, point) / vandermonde(point)
    # the determinant form computes tau_{high, low}
    return value if a > b else -value


def tau(point, a: int, b: int, form: str = "sigma") -> complex:
    """``sigma_{n-a+1} sigma_{n-b} - sigma_{n-a} sigma_{n-b+1}``.

    With ``form="alternant"`` the value is computed as a ratio of alternants
    whose exponents are ``n+1, ..., 0`` with a and b removed.
    """
    eps = _eps(point)
    n = eps.size
    if not (0 <= a <= n + 1 and 0 <= b <= n + 1):
        raise DimensionMismatch(f"tau indices ({a}, {b}) out of range for n={n}.")
    if form == "sigma":
        return _tau_sigma(eps, a, b)
    if form == "alternant":
        return _tau_alternant(_separated(eps), a, b)
    raise ValueError(f"Unknown form '{form}'.")


def verify_tau_identity(point, a: int, b: int) -> float:
    """Relative residual between the two evaluations of ``tau_{a,b}``."""
    by_sigma = tau(point, a, b)
    by_alternant = tau(point, a, b, form="alternant")
    return float(abs(by_sigma - by_alternant) / max(1.0, abs(by_sigma)))


def dim_from_character(n: int, p: int, q: int, k: int, step: float = 1e-4) -> int:
    """Dimension read off the character at ``eps_j = exp(i j step)`` near 1."""
    eps = np.exp(1j * step * np.arange(1, n + 1))
    return round(chi_pq_k(eps, p, q, k).real)


def character_sum(point, p: int, q: int) -> complex:
    """Sum over k of the piece characters, equal to ``chi_pq``."""
    eps = _eps(point)
    return complex(sum(chi_pq_k(eps, p, q, k) for k in range(min(p, q) + 1)))
