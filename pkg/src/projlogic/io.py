"""Matrix and family files.

A matrix file is a JSON object ``{"dim": n, "re": [[...]], "im": [[...]]}``.
A family file lists elements, each either an inline matrix or a path to a
matrix file (relative to the family file), with a role tag::

    {"dim": 2,
     "elements": [{"label": "e1", "role": "projector", "matrix": {...}},
                  {"label": "x", "role": "effect", "file": "x.json"}]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionError, InvariantError, ProjLogicError
from .fuzzy import MembershipFunction
from .operators import check_projector, make_hermitian

ROLES = ("projector", "effect")


class IngestionError(ProjLogicError):
    pass


def matrix_to_doc(a) -> dict:
    a = np.asarray(a, dtype=complex)
    return {"dim": a.shape[0], "re": a.real.tolist(), "im": a.imag.tolist()}


def matrix_from_doc(doc: dict) -> np.ndarray:
    try:
        n = int(doc["dim"])
        raw = np.array(doc["re"], dtype=float) + 1j * np.array(doc["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise IngestionError(f"malformed matrix document: {exc}") from exc
    if raw.shape != (n, n):
        raise DimensionError(f"declared dim {n} but arrays have shape {raw.shape}")
    return make_hermitian(raw)


def load_matrix(path) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise IngestionError(f"cannot read matrix file {path}: {exc}") from exc
    return matrix_from_doc(doc)


def save_matrix(a, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_doc(a)))


@dataclass(frozen=True, eq=False)
class FamilyElement:
    label: str
    role: str
    matrix: np.ndarray


def load_family(path) -> list[FamilyElement]:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise IngestionError(f"cannot read family file {path}: {exc}") from exc
    if not isinstance(doc, dict) or "elements" not in doc:
        raise IngestionError("family document needs an 'elements' list")
    out = []
    for k, item in enumerate(doc["elements"]):
        role = item.get("role", "projector")
        if role not in ROLES:
            raise IngestionError(f"element {k}: unknown role {role!r}")
        if "matrix" in item:
            m = matrix_from_doc(item["matrix"])
        elif "file" in item:
            m = load_matrix(path.parent / item["file"])
        else:
            raise IngestionError(f"element {k}: needs 'matrix' or 'file'")
        try:
            if role == "projector":
                check_projector(m)
            else:
                MembershipFunction.from_operator(m)
        except InvariantError as exc:
            raise IngestionError(f"element {k} is not a valid {role}: {exc}") from exc
        out.append(FamilyElement(item.get("label", f"P{k}"), role, m))
    dims = {e.matrix.shape[0] for e in out}
    if "dim" in doc:
        dims.add(int(doc["dim"]))
    if len(dims) > 1:
        raise DimensionError(f"family mixes dimensions {sorted(dims)}")
    return out


def save_family(elements, path, dim: int | None = None) -> None:
    """``elements`` is a sequence of ``(label, role, matrix)`` triples."""
    items = [{"label": lab, "role": role, "matrix": matrix_to_doc(m)} for lab, role, m in elements]
    doc = {"dim": dim if dim is not None else items[0]["matrix"]["dim"], "elements": items}
    Path(path).write_text(json.dumps(doc, indent=1))
