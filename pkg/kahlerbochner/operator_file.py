"""Read and write curvature operators in the kco-v1 JSON format."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np
from attrs import field, frozen

from kahlerbochner.configuration import get_operator_schema, tolerance
from kahlerbochner.curvature import (
    KahlerCurvature,
    from_operator_matrix,
    sym2_dimension,
    sym2_pairs,
)
from kahlerbochner.exceptions import (
    NonHermitianInput,
    NonSymmetricInput,
    SchemaError,
    SizeMismatch,
)
from kahlerbochner.logger import kahlerbochner_log
from kahlerbochner.utils import create_dir_for_file

log = kahlerbochner_log(name="kahlerbochner")

FORMAT = "kco-v1"
BASIS_ORDER = "Rij_lex,Iij_lex,Iii_asc"
REPRESENTATIONS = ("u_operator", "hermitian_sym2")


def validate_document(document: Any) -> None:
    """Validate a decoded file against the kco-v1 schema.

    :raises SchemaError: with the path of the offending field
    """
    validator = jsonschema.Draft202012Validator(get_operator_schema())
    error = jsonschema.exceptions.best_match(validator.iter_errors(document))
    if error is not None:
        where = "/".join(str(part) for part in error.absolute_path) or "<root>"
        raise SchemaError(f"{where}: {error.message}")


@frozen
class OperatorFile:
    """Decoded content of a kco-v1 file; ``matrix`` is the raw payload."""

    n: int
    representation: str = field()
    matrix: list
    metadata: dict = field(factory=dict)

    @representation.validator
    def _check_representation(self, attribute, value: str) -> None:
        if value not in REPRESENTATIONS:
            raise SchemaError(
                f"representation: '{value}' is not one of {REPRESENTATIONS}"
            )

    @classmethod
    def from_document(cls, document: Any) -> OperatorFile:
        validate_document(document)
        return cls(
            n=document["n"],
            representation=document["representation"],
            matrix=document["matrix"],
            metadata=document.get("metadata", {}),
        )

    @classmethod
    def from_curvature(
        cls,
        R: KahlerCurvature,
        representation: str = "u_operator",
        metadata: dict | None = None,
    ) -> OperatorFile:
        if representation == "u_operator":
            matrix = [float(x) for x in np.asarray(R.operator_matrix).reshape(-1)]
        else:
            matrix = _hermitian_entries(R)
        return cls(R.n, representation, matrix, dict(metadata or {}))

    def to_document(self) -> dict:
        document = {
            "format": FORMAT,
            "n": self.n,
            "representation": self.representation,
            "basis_order": BASIS_ORDER,
            "matrix": self.matrix,
        }
        if self.metadata:
            document["metadata"] = self.metadata
        return document

    def to_curvature(self) -> KahlerCurvature:
        """Build the curvature tensor.

        :raises SizeMismatch: if the payload does not fit n
        :raises NonSymmetricInput: if the u(n) matrix is not symmetric
        :raises NonHermitianInput: if the Sym2 entries are not Hermitian
        :raises BianchiViolation: if a u(n) matrix fails the first Bianchi identity
        """
        if self.representation == "u_operator":
            return _curvature_from_operator(self.n, self.matrix)
        return _curvature_from_entries(self.n, self.matrix)


def _hermitian_entries(R: KahlerCurvature) -> list[dict]:
    pairs = sym2_pairs(R.n)
    entries = []
    for b, (i, k) in enumerate(pairs):
        for c, (j, l) in enumerate(pairs):
            value = complex(R.herm[b, c])
            if value == 0:
                continue
            entries.append(
                {
                    "i": i + 1,
                    "k": k + 1,
                    "j": j + 1,
                    "l": l + 1,
                    "re": value.real,
                    "im": value.imag,
                }
            )
    return entries


def _curvature_from_operator(n: int, payload: list) -> KahlerCurvature:
    size = n * n
    if len(payload) != size * size:
        raise SizeMismatch(
            f"matrix: expected {size * size} numbers for n={n}, got {len(payload)}"
        )
    matrix = np.asarray(payload, dtype=float).reshape(size, size)
    asym = float(np.max(np.abs(matrix - matrix.T)))
    if asym > tolerance("file_symmetry") * max(1.0, float(np.max(np.abs(matrix)))):
        raise NonSymmetricInput("matrix is not symmetric", asym)
    return from_operator_matrix(n, 0.5 * (matrix + matrix.T))


def _curvature_from_entries(n: int, payload: list[dict]) -> KahlerCurvature:
    index = {pair: idx for idx, pair in enumerate(sym2_pairs(n))}
    herm = np.zeros((sym2_dimension(n),) * 2, dtype=complex)
    seen: set[tuple[int, int]] = set()
    for position, entry in enumerate(payload):
        i, k, j, l = (entry[key] - 1 for key in ("i", "k", "j", "l"))
        if max(i, k, j, l) >= n:
            raise SizeMismatch(f"matrix/{position}: index larger than n={n}")
        if i > k or j > l:
            raise SchemaError(f"matrix/{position}: entries need i <= k and j <= l")
        b, c = index[(i, k)], index[(j, l)]
        herm[b, c] = complex(entry["re"], entry["im"])
        seen.add((b, c))
    for b, c in seen:
        if (c, b) not in seen:
            herm[c, b] = np.conj(herm[b, c])
    defect = float(np.max(np.abs(herm - herm.conj().T), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(herm), initial=0.0)))
    if defect > tolerance("file_symmetry") * scale:
        raise NonHermitianInput("Sym2 entries are not Hermitian", defect)
    return KahlerCurvature(n, 0.5 * (herm + herm.conj().T))


def read_operator_file(path: str | Path) -> OperatorFile:
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc.msg})") from exc
    return OperatorFile.from_document(document)


def load_operator(path: str | Path) -> KahlerCurvature:
    """Load a curvature tensor from a kco-v1 file."""
    log.debug(f"Loading operator from: {path}")
    return read_operator_file(path).to_curvature()


def save_operator(
    R: KahlerCurvature,
    path: str | Path,
    representation: str = "u_operator",
    metadata: dict | None = None,
) -> Path:
    """Write R as a kco-v1 file; floats keep full precision."""
    path = Path(path)
    create_dir_for_file(path)
    document = OperatorFile.from_curvature(R, representation, metadata).to_document()
    content = json.dumps(document, indent=4, sort_keys=True) + "\n"
    path.write_text(content, encoding="utf-8")
    log.info(f"Operator written to: {path}")
    return path


def file_digest(path: str | Path) -> str:
    """sha256 of the file bytes."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
