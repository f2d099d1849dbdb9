"""Curvature term of the Lichnerowicz Laplacian and the eigenvalue conditions on it."""

from __future__ import annotations

import itertools
from enum import Enum
from math import comb, factorial, floor, isclose, sqrt

import numpy as np
from attrs import define, evolve, field, frozen
from scipy.linalg import eigh

from kahlerbochner.complex_exterior import (
    PQForm,
    kahler_power,
    project,
    random_flag_form,
    random_form,
    ring_reduce,
    to_alternating_tensor,
    wedge,
)
from kahlerbochner.configuration import tolerance
from kahlerbochner.curvature import (
    KahlerCurvature,
    Spectrum,
    model_cpn,
    ricci,
    spectrum,
)
from kahlerbochner.exceptions import (
    DimensionMismatch,
    KahlerCurvatureError,
    VerificationFailure,
)
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.unitary_lie import (
    LieElement,
    basis_form_actions,
    act_on_curvature,
    act_on_form,
    random_u_element,
    tensor_norm_sq,
)
from kahlerbochner.utils import trial_rng

log = kahlerbochner_log(name="kahlerbochner")

BOUNDARY_TOL = tolerance("boundary")
BOUND_SLACK = 1e-9


def c_pq(n: int, p: int, q: int) -> float:
    """Return ``n + 1 - (p^2 + q^2) / (p + q)``.

    >>> c_pq(4, 4, 0)
    1.0
    """
    if p + q < 1:
        raise DimensionMismatch("C^{p,q} needs p + q >= 1.")
    return n + 1 - (p * p + q * q) / (p + q)


def c_pq_k(n: int, p: int, q: int, k: int) -> float | None:
    """Return ``n + 1 - (p + q) + 2 (pq - k^2) / (p + q - 2k)``, None when p = q = k."""
    if not 0 <= k <= min(p, q):
        raise DimensionMismatch(f"k={k} out of range for bidegree ({p}, {q}).")
    if p + q - 2 * k == 0:
        return None
    return n + 1 - (p + q) + 2 * (p * q - k * k) / (p + q - 2 * k)


def hat_norm_coefficient(n: int, p: int, q: int, k: int) -> float:
    """Ratio of the hat norm of a level-k form to the squared norm of its ring part."""
    a, b = p - k, q - k
    return 2 * a * b + (a + b) * (n + 1 - (a + b))


def _values(spec: Spectrum | np.ndarray | list[float]) -> np.ndarray:
    if isinstance(spec, Spectrum):
        return np.asarray(spec.eigenvalues)
    return np.sort(np.asarray(spec, dtype=float))


@frozen
class WeightedCondition:
    """``lambda_1 + ... + lambda_l + w lambda_(l+1) >= kappa (l + 1)`` (strict: ``>``)."""

    count: int = field(converter=int)
    weight: float = field(converter=float)
    kappa: float = field(default=0.0, converter=float)
    strict: bool = True

    @count.validator
    def _check_count(self, attribute, value: int) -> None:
        if value < 1:
            raise ValueError(f"count must be at least 1, got {value}.")

    @weight.validator
    def _check_weight(self, attribute, value: float) -> None:
        if not 0 <= value <= 1:
            raise ValueError(f"weight must lie in [0, 1], got {value}.")

    @kappa.validator
    def _check_kappa(self, attribute, value: float) -> None:
        if value > 0:
            raise ValueError(f"kappa must be non-positive, got {value}.")

    @classmethod
    def from_constant(
        cls, C: float, kappa: float = 0.0, strict: bool = True
    ) -> WeightedCondition:
        if C < 1:
            raise ValueError(f"C must be at least 1, got {C}.")
        count = floor(C + 1e-12)
        weight = max(0.0, C - count)
        return cls(count, weight, kappa, strict)

    @property
    def constant(self) -> float:
        return self.count + self.weight

    def evaluate(self, spec) -> ConditionResult:
        values = _values(spec)
        needed = self.count + (1 if self.weight > 0 else 0)
        if needed > len(values):
            raise DimensionMismatch(
                f"Condition needs {needed} eigenvalues, spectrum has {len(values)}."
            )
        total = float(np.sum(values[: self.count]))
        if self.weight > 0:
            total += self.weight * float(values[self.count])
        margin = total - self.kappa * (self.count + 1)
        return ConditionResult.from_margin(margin, self.strict, self.constant, self.kappa)


@frozen
class ConditionResult:
    """Outcome of an eigenvalue condition; unpacks as ``(satisfied, margin)``."""

    satisfied: bool
    margin: float
    boundary: bool
    constant: float | None = None
    kappa: float = 0.0
    strict: bool = True

    @classmethod
    def from_margin(
        cls,
        margin: float,
        strict: bool,
        constant: float | None = None,
        kappa: float = 0.0,
    ) -> ConditionResult:
        boundary = abs(margin) <= BOUNDARY_TOL
        satisfied = margin > BOUNDARY_TOL if strict else margin >= -BOUNDARY_TOL
        return cls(
            bool(satisfied), float(margin), bool(boundary), constant, kappa, strict
        )

    def __iter__(self):
        return iter((self.satisfied, self.margin))

    def to_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "margin": self.margin,
            "boundary": self.boundary,
            "constant": self.constant,
            "kappa": self.kappa,
            "strict": self.strict,
        }


def weighted_sum(
    spec, C: float, kappa: float = 0.0, strict: bool = True
) -> ConditionResult:
    """Evaluate ``lambda_1 + ... + lambda_l + (C - l) lambda_(l+1) - kappa (l + 1)``.

    Here ``l = floor(C)``.

    >>> satisfied, margin = weighted_sum([-1, -1, 6, 8], 2.5)
    >>> satisfied, margin
    (True, 1.0)
    """
    return WeightedCondition.from_constant(C, kappa, strict).evaluate(spec)


def integer_condition(
    spec, C: int, kappa: float = 0.0, strict: bool = False
) -> ConditionResult:
    """Evaluate ``lambda_1 + ... + lambda_C - kappa C`` for an integer C."""
    values = _values(spec)
    if int(C) != C or C < 1 or C > len(values):
        raise DimensionMismatch(f"C={C} must be an integer between 1 and {len(values)}.")
    margin = float(np.sum(values[: int(C)])) - kappa * C
    return ConditionResult.from_margin(margin, strict, float(C), kappa)


def lemma_lower_bound(C: float, kappa: float) -> float:
    """Constant c with ``g(R(T^u), T^u) >= c |T^u|^2`` under the condition at C."""
    return kappa * (floor(C + 1e-12) + 1) / C


def theorem_a_condition(spec, n: int, strict: bool = True) -> ConditionResult:
    """``lambda_1 + lambda_2 + (1 - 2/n) lambda_3``.

    The non-strict form makes every harmonic form parallel.
    """
    return weighted_sum(spec, 3 - 2 / n, 0.0, strict)


def tachibana_condition(
    spec, n: int, strict: bool = True, warn: bool = True
) -> ConditionResult:
    """Weighted condition with count ``floor((n+1)/2)``, weight ``(1 + (-1)^n) / 4``."""
    if warn and n < 4:
        log.warning(f"Tachibana-type condition evaluated for n={n} < 4.")
    count = (n + 1) // 2
    weight = (1 + (-1) ** n) / 4
    return WeightedCondition(count, weight, 0.0, strict).evaluate(spec)


def _operator_eigen(R) -> tuple[np.ndarray, np.ndarray, int]:
    if isinstance(R, KahlerCurvature):
        values, vectors = eigh(R.operator_matrix)
        return values, vectors, R.n
    matrix = np.asarray(R, dtype=float)
    n = round(sqrt(matrix.shape[0]))
    if matrix.shape != (n * n, n * n):
        raise DimensionMismatch(
            f"Expected an operator on u(n), got shape {matrix.shape}."
        )
    values, vectors = eigh(0.5 * (matrix + matrix.T))
    return values, vectors, n


def _frame_weitzenboeck(R: KahlerCurvature, T: np.ndarray) -> np.ndarray:
    rank = T.ndim
    ric = ricci(R)
    out = np.zeros_like(T)
    for i in range(rank):
        out += np.moveaxis(np.tensordot(ric, T, axes=([1], [i])), 0, i)
        for s in range(rank):
            if s == i:
                continue
            contracted = np.tensordot(R.tensor, T, axes=([1, 3], [i, s]))
            out -= np.moveaxis(contracted, [0, 1], [i, s])
    return out


def weitzenboeck_frame_sum(R: KahlerCurvature, phi: PQForm) -> complex:
    """``g(Ric(phi), phi)`` from the frame double sum on the alternating tensor of phi."""
    if R.n != phi.n:
        raise DimensionMismatch(f"Curvature on C^{R.n} and form on C^{phi.n}.")
    T = to_alternating_tensor(phi)
    if T.ndim == 0:
        return 0j
    value = np.sum(_frame_weitzenboeck(R, T) * T.conj())
    return complex(value / factorial(T.ndim))


def weitzenboeck_eigenbasis(R, phi: PQForm) -> complex:
    """``sum_a lambda_a |X_a phi|^2`` over an orthonormal eigenbasis of the operator.

    ``R`` is a KahlerCurvature or any symmetric matrix on u(n).
    """
    values, vectors, n = _operator_eigen(R)
    if n != phi.n:
        raise DimensionMismatch(f"Operator on u({n}) and form on C^{phi.n}.")
    mats = basis_form_actions(n, phi.p, phi.q)
    total = 0.0
    for lam, vec in zip(values, vectors.T, strict=True):
        image = phi.with_coeffs(np.einsum("a,aij->ij", vec, mats) @ phi.coeffs)
        total += lam * image.norm_sq()
    return complex(total)


def weitzenboeck_quadratic(R, phi: PQForm, path: str = "eigenbasis") -> float:
    """Curvature term ``g(Ric(phi), phi bar)`` of the Lichnerowicz Laplacian.

    :param path: ``"eigenbasis"`` or ``"frame"``
    """
    if path == "eigenbasis":
        value = weitzenboeck_eigenbasis(R, phi)
    elif path == "frame":
        value = weitzenboeck_frame_sum(R, phi)
    else:
        raise ValueError(f"Unknown path '{path}'.")
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        log.warning(f"Curvature term has an imaginary residue {value.imag:.3e}.")
    return float(value.real)


def curvature_quadratic(R: KahlerCurvature) -> float:
    """``sum_a lambda_a |X_a R|^2`` for the curvature tensor itself."""
    values, vectors = eigh(R.operator_matrix)
    total = 0.0
    for lam, vec in zip(values, vectors.T, strict=True):
        element = LieElement.from_u(R.n, vec)
        total += lam * tensor_norm_sq(act_on_curvature(element, R))
    return float(total)


def action_bound_extremizer(
    n: int, p: int, q: int, k: int
) -> tuple[LieElement, PQForm] | None:
    """Pair (L, phi) attaining ``|L phi|^2 = (p+q-2k) |L|^2 |phi_ring|^2``.

    phi is ``dz^I ^ omega^k ^ dzbar^J`` with disjoint I, J; L acts by +i on I
    and by -i on J. None when no such pair exists.
    """
    if p + q - 2 * k <= 0 or p + q - k > n:
        return None
    I = tuple(range(p - k))
    J = tuple(range(p - k, p + q - 2 * k))
    phi = wedge(
        wedge(PQForm.basis_form(n, I, ()), kahler_power(n, k)),
        PQForm.basis_form(n, (), J),
    )
    u_coeffs = np.zeros(n * n)
    offset = n * (n - 1)
    for i in I:
        u_coeffs[offset + i] = 1.0
    for j in J:
        u_coeffs[offset + j] = -1.0
    return LieElement.from_u(n, u_coeffs), phi


def action_ratio(L: LieElement, phi: PQForm, k: int) -> float | None:
    """``|L phi|^2 / ((p+q-2k) |L|^2 |phi_ring|^2)``, None on a zero denominator."""
    ring_sq = ring_reduce(phi).norm_sq()
    denom = (phi.p + phi.q - 2 * k) * L.norm_sq() * ring_sq
    if denom <= 1e-12 * max(1.0, phi.norm_sq()):
        return None
    return act_on_form(L, phi).norm_sq() / denom


def verify_action_bound(
    n: int, p: int, q: int, k: int, trials: int = 100, seed: int = 0
) -> float:
    """Largest sampled action ratio over L in u(n) and phi in the level-k flag.

    :raises KahlerCurvatureError: for the degenerate case p = q = k
    :raises VerificationFailure: if a ratio exceeds 1
    """
    if p + q - 2 * k == 0:
        raise KahlerCurvatureError("The action bound is degenerate for p = q = k.")
    best = 0.0
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        L = random_u_element(n, rng)
        phi = random_flag_form(n, p, q, k, rng)
        ratio = action_ratio(L, phi, k)
        if ratio is not None:
            best = max(best, ratio)
    if best > 1 + BOUND_SLACK:
        raise VerificationFailure(
            f"Action ratio {best} exceeds 1 for (n, p, q, k)={(n, p, q, k)}."
        )
    return best


@define
class LowerBoundCheck:
    """Result of sampling the curvature-term lower bound on one irreducible piece."""

    precondition: ConditionResult | None
    holds: bool | None = None
    min_slack: float | None = None
    positive: bool | None = None
    trials: int = 0

    @property
    def precondition_met(self) -> bool:
        return self.precondition is not None and self.precondition.satisfied

    def __bool__(self) -> bool:
        return bool(self.precondition_met and self.holds)


def _bound_factor(
    n: int, p: int, q: int, k: int, C: float, corollary: bool, integer_variant: bool
) -> float:
    if corollary and integer_variant:
        return 2 * p * q + (n + 1 - (p + q)) * (p + q)
    if corollary:
        return (n + 2 - abs(p - q)) * (p + q)
    if integer_variant:
        return hat_norm_coefficient(n, p, q, k)
    return (floor(C + 1e-12) + 1) * (p + q - 2 * k)


def quadratic_lower_bound_check(
    R: KahlerCurvature,
    n: int,
    p: int,
    q: int,
    k: int,
    kappa: float = 0.0,
    trials: int = 20,
    seed: int = 0,
    corollary: bool = False,
    integer_variant: bool = False,
    strict: bool = False,
) -> LowerBoundCheck:
    """Sample ``g(R(phi^u), phi^u) >= kappa * factor * |phi_ring|^2`` on random forms.

    The weighted condition at ``C^{p,q}_k`` (or ``C^{p,q}`` with ``corollary``) is checked
    first; when it fails the result reports the unmet precondition without sampling.
    With ``integer_variant`` the condition is ``lambda_1 + ... + lambda_C >= kappa C``.
    """
    if R.n != n:
        raise DimensionMismatch(f"Curvature on C^{R.n}, expected n={n}.")
    if corollary:
        C = c_pq(n, p, q)
    else:
        C = c_pq_k(n, p, q, k)
        if C is None:
            return LowerBoundCheck(precondition=None, holds=True, trials=0)

    spec = spectrum(R)
    if integer_variant:
        if not isclose(C, round(C), abs_tol=1e-12):
            log.warning(f"C={C} is not an integer; integer condition not applicable.")
            return LowerBoundCheck(precondition=None)
        condition = integer_condition(spec, round(C), kappa, strict=strict)
    else:
        condition = weighted_sum(spec, C, kappa, strict=strict)
    if not condition.satisfied:
        return LowerBoundCheck(precondition=condition)

    factor = _bound_factor(n, p, q, k, C, corollary, integer_variant)
    min_slack = np.inf
    positive = True
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        phi = random_form(n, p, q, rng)
        if not corollary:
            phi = project(phi, k)
        ring_sq = ring_reduce(phi).norm_sq()
        value = weitzenboeck_quadratic(R, phi)
        slack = value - kappa * factor * ring_sq
        scale = max(1.0, abs(value), abs(kappa * factor * ring_sq))
        min_slack = min(min_slack, slack / scale)
        if strict and kappa == 0 and ring_sq > 1e-12 and value <= 0:
            positive = False
    return LowerBoundCheck(
        precondition=condition,
        holds=bool(min_slack >= -BOUND_SLACK),
        min_slack=float(min_slack),
        positive=positive if strict and kappa == 0 else None,
        trials=trials,
    )


def tune_to_condition(
    R: KahlerCurvature, C: float, kappa: float = 0.0, margin: float = 0.1
) -> KahlerCurvature:
    """Return ``R + c R_CPn`` whose weighted margin at C equals ``margin``.

    The margin is nondecreasing in c since the added operator is positive definite.
    """

    def margin_at(c: float) -> float:
        return weighted_sum(spectrum(R + c * model_cpn(R.n)), C, kappa).margin - margin

    scale = 1.0 + float(np.max(np.abs(R.operator_matrix)))
    lo, hi = -scale, scale
    while margin_at(lo) > 0:
        lo *= 2
    while margin_at(hi) < 0:
        hi *= 2
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if margin_at(mid) < 0:
            lo = mid
        else:
            hi = mid
    return R + hi * model_cpn(R.n)


class HodgeStatus(str, Enum):
    VANISHES = "VANISHES"
    EQUALS_ONE = "EQUALS_ONE"
    PARALLEL_ONLY = "PARALLEL_ONLY"
    NO_CONCLUSION = "NO_CONCLUSION"

    def __str__(self) -> str:
        return self.value


@frozen
class HodgeEntry:
    p: int
    q: int
    status: HodgeStatus
    route: str
    margin: float | None = None
    boundary: bool = False
    binomial_cap: int | None = None
    exponent_argument: float | None = None
    estimate_margin: float | None = None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "status": str(self.status),
            "route": self.route,
            "margin": self.margin,
            "boundary": self.boundary,
            "binomial_cap": self.binomial_cap,
            "exponent_argument": self.exponent_argument,
            "estimate_margin": self.estimate_margin,
        }


@frozen
class HodgeReport:
    """Hodge number conclusions for compact Kahler manifolds with these bounds."""

    n: int
    entries: dict[tuple[int, int], HodgeEntry]
    theorem_a: ConditionResult
    all_parallel: ConditionResult
    tachibana: ConditionResult
    kappa: float | None = None
    diameter: float | None = None
    total_betti_margin: float | None = None
    total_betti_cap: int | None = None
    total_betti_exponent_argument: float | None = None

    def status(self, p: int, q: int) -> HodgeStatus:
        return self.entries[(p, q)].status

    def diamond(self) -> list[list[int | None]]:
        """Known Hodge numbers by (p, q); None where no value is implied."""
        values = {HodgeStatus.VANISHES: 0, HodgeStatus.EQUALS_ONE: 1}
        return [
            [values.get(self.entries[(p, q)].status) for q in range(self.n + 1)]
            for p in range(self.n + 1)
        ]

    def is_projective_space_diamond(self) -> bool:
        return all(
            value == (1 if p == q else 0)
            for p, row in enumerate(self.diamond())
            for q, value in enumerate(row)
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [self.entries[key].to_dict() for key in sorted(self.entries)],
            "diamond": self.diamond(),
            "theorem_a": self.theorem_a.to_dict(),
            "all_parallel": self.all_parallel.to_dict(),
            "tachibana": self.tachibana.to_dict(),
            "kappa": self.kappa,
            "diameter": self.diameter,
            "total_betti_margin": self.total_betti_margin,
            "total_betti_cap": self.total_betti_cap,
            "total_betti_exponent_argument": self.total_betti_exponent_argument,
        }


def _ricci_route(
    values: np.ndarray, n: int, p: int, ricci_eigenvalues: np.ndarray | None
) -> tuple[bool, float, str]:
    """Bochner's vanishing of holomorphic p-forms from (k-)positive Ricci curvature."""
    if ricci_eigenvalues is not None:
        lowest = float(np.sum(np.sort(ricci_eigenvalues)[:p]))
        return lowest > BOUNDARY_TOL, lowest, f"ricci-{p}-positive"
    proxy = float(np.sum(values[:n]))
    if proxy > BOUNDARY_TOL:
        return True, proxy, "ricci-positive-proxy"
    if p == n:
        scal_half = float(np.sum(values))
        return scal_half > BOUNDARY_TOL, scal_half, "scalar-positive"
    return False, proxy, "ricci-positive-proxy"


def _entry(
    values: np.ndarray,
    n: int,
    p: int,
    q: int,
    ricci_eigenvalues: np.ndarray | None,
    resolve_boundary: bool,
) -> HodgeEntry:
    if p == q == 0:
        return HodgeEntry(p, q, HodgeStatus.EQUALS_ONE, "constants")

    C = c_pq(n, p, q)
    strict = weighted_sum(values, C, 0.0, strict=True)
    if strict.satisfied:
        status = HodgeStatus.EQUALS_ONE if p == q else HodgeStatus.VANISHES
        return HodgeEntry(p, q, status, "weighted-C^{p,q}", strict.margin)

    if p == 0 or q == 0:
        fires, margin, route = _ricci_route(values, n, max(p, q), ricci_eigenvalues)
        if fires:
            return HodgeEntry(p, q, HodgeStatus.VANISHES, route, margin)

    if strict.boundary:
        if resolve_boundary:
            return HodgeEntry(
                p,
                q,
                HodgeStatus.PARALLEL_ONLY,
                "weighted-C^{p,q}-nonstrict",
                strict.margin,
                True,
            )
        return HodgeEntry(
            p, q, HodgeStatus.NO_CONCLUSION, "boundary", strict.margin, True
        )
    return HodgeEntry(p, q, HodgeStatus.NO_CONCLUSION, "none", strict.margin)


def _with_estimate(
    entry: HodgeEntry, values: np.ndarray, n: int, kappa: float, diameter: float
) -> HodgeEntry:
    p, q = entry.p, entry.q
    if p + q == 0:
        return entry
    C = c_pq(n, p, q)
    condition = weighted_sum(values, C, kappa, strict=False)
    if not condition.satisfied:
        condition = integer_condition(values, floor(C + 1e-12), kappa, strict=False)
    if not condition.satisfied:
        return evolve(entry, estimate_margin=condition.margin)
    return evolve(
        entry,
        estimate_margin=condition.margin,
        binomial_cap=comb(n, p) * comb(n, q),
        exponent_argument=sqrt(-kappa * diameter**2 * (n + 2 - abs(p - q)) * (p + q)),
    )


def hodge_report(
    spec,
    n: int,
    kappa: float | None = None,
    diameter: float | None = None,
    ricci_eigenvalues=None,
    resolve_boundary: bool = False,
) -> HodgeReport:
    """Evaluate the vanishing, rigidity and estimation conditions for every (p, q).

    Entries with ``p + q > n`` are folded from ``(n - p, n - q)``.

    :param ricci_eigenvalues: the n eigenvalues of the Hermitian Ricci form when the
                              tensor is known; otherwise ``lambda_1 + ... + lambda_n``
                              bounds the Ricci curvature from below
    :param resolve_boundary: classify margins within the boundary band as PARALLEL_ONLY
                             instead of NO_CONCLUSION

    :raises ValueError: on inconsistent kappa / diameter or spectrum length
    """
    values = _values(spec)
    if len(values) != n * n:
        raise DimensionMismatch(f"Spectrum of length {len(values)} for n={n}.")
    if kappa is not None and kappa > 0:
        raise ValueError(f"kappa must be non-positive, got {kappa}.")
    if diameter is not None and (kappa is None or diameter <= 0):
        raise ValueError("A positive diameter requires kappa.")
    ricci_values = (
        None if ricci_eigenvalues is None else np.asarray(ricci_eigenvalues, float)
    )

    entries: dict[tuple[int, int], HodgeEntry] = {}
    for p, q in itertools.product(range(n + 1), repeat=2):
        if p + q > n:
            continue
        entry = _entry(values, n, p, q, ricci_values, resolve_boundary)
        if kappa is not None and diameter is not None:
            entry = _with_estimate(entry, values, n, kappa, diameter)
        entries[(p, q)] = entry
    for p, q in itertools.product(range(n + 1), repeat=2):
        if p + q > n:
            source = entries[(n - p, n - q)]
            entries[(p, q)] = evolve(source, p=p, q=q, route=f"serre-fold:{source.route}")

    total_margin = total_cap = total_exponent = None
    if kappa is not None and diameter is not None:
        C = 3 - 2 / n
        total_margin = weighted_sum(values, C, 0.0, strict=False).margin - kappa
        if total_margin >= -BOUNDARY_TOL:
            total_cap = 4**n
            total_exponent = sqrt(-kappa * diameter**2)

    return HodgeReport(
        n=n,
        entries=entries,
        theorem_a=theorem_a_condition(values, n, strict=True),
        all_parallel=theorem_a_condition(values, n, strict=False),
        tachibana=tachibana_condition(values, n, strict=True, warn=False),
        kappa=kappa,
        diameter=diameter,
        total_betti_margin=total_margin,
        total_betti_cap=total_cap,
        total_betti_exponent_argument=total_exponent,
    )


def ricci_eigenvalues(R: KahlerCurvature) -> np.ndarray:
    """The n eigenvalues of the Ricci tensor; each appears twice on R^2n."""
    return np.sort(np.linalg.eigvalsh(ricci(R)))[::2]


def hodge_report_for(
    R: KahlerCurvature,
    kappa: float | None = None,
    diameter: float | None = None,
    resolve_boundary: bool = False,
) -> HodgeReport:
    return hodge_report(
        spectrum(R),
        R.n,
        kappa=kappa,
        diameter=diameter,
        ricci_eigenvalues=ricci_eigenvalues(R),
        resolve_boundary=resolve_boundary,
    )
