"""Standard test families of projectors."""

from __future__ import annotations

import itertools

import numpy as np

from .operators import basis_vector, projector_onto
from .star import FuzzyEvent


def spin_family() -> list[FuzzyEvent]:
    """``{e1, e2, +, -}`` in C^2: two incompatible Boolean blocks."""
    s = 1 / np.sqrt(2)
    return [
        FuzzyEvent(projector_onto([1, 0]), "e1", True),
        FuzzyEvent(projector_onto([0, 1]), "e2", True),
        FuzzyEvent(projector_onto([s, s]), "+", True),
        FuzzyEvent(projector_onto([s, -s]), "-", True),
    ]


def diagonal_family(n: int) -> list[FuzzyEvent]:
    """All ``2^n`` coordinate-subspace projectors of C^n (a Boolean algebra)."""
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        label = "{" + ",".join(str(k + 1) for k in range(n) if bits[k]) + "}"
        out.append(FuzzyEvent(np.diag(np.array(bits, dtype=complex)), label, True))
    return out


def coordinate_projector(n: int, *indices: int) -> np.ndarray:
    return projector_onto(*(basis_vector(n, k) for k in indices))
