"""Errors raised by kahlerbochner."""

from __future__ import annotations


class KahlerCurvatureError(ValueError):
    """Base class of every error raised on invalid mathematical input."""


class DimensionMismatch(KahlerCurvatureError):
    """Incompatible complex dimension, bidegree or array shape."""


class _DefectError(KahlerCurvatureError):
    def __init__(self, message: str, defect: float) -> None:
        super().__init__(f"{message} (defect={defect:.3e})")
        self.defect = float(defect)


class NonHermitianInput(_DefectError):
    """The Hermitian form on Sym2 is not conjugate-symmetric."""


class NonSymmetricInput(_DefectError):
    """The operator matrix on u(n) is not symmetric."""


class BianchiViolation(_DefectError):
    """The induced 4-tensor fails the first Bianchi identity."""


class UnsortedSpectrum(KahlerCurvatureError):
    """Spectrum values are not in ascending order."""


class EigensolverError(_DefectError):
    """The eigendecomposition does not reproduce the operator matrix."""


class NotKahlerError(KahlerCurvatureError):

    """The tensor is not supported on u(n)."""


class NotInUnitaryAlgebra(KahlerCurvatureError):
    """A Lie algebra element has a component along the orthogonal complement of u(n)."""


class NearSingularTorusPoint(KahlerCurvatureError):
    """Torus point entries are not unit modulus or are too close to each other."""


class SchemaError(KahlerCurvatureError):
    """An operator file does not follow the kco-v1 layout."""


class SizeMismatch(SchemaError):
    """Declared sizes in an operator file disagree with the payload."""


class VerificationFailure(RuntimeError):
    """An identity checked by the verification suite does not hold."""
