"""Fixed corpora of scalar fields and operator pairs used by the suites."""

from __future__ import annotations

import numpy as np

from .kahler import Observable
from .operators import (
    basis_vector, dagger, expectation, haar_unitary, point_from_vector, random_hermitian,
    random_projector,
)


def _e(n, k):
    return point_from_vector(basis_vector(n, k))


def nonobservable_corpus(n: int) -> list[tuple[str, object]]:
    """[0, 1]-valued fields that are not of the form ``tr(T p)``.

    Each is paired with the base point ``e_1`` in the reproducing check.
    """
    p1, p2 = _e(n, 0), _e(n, 1)

    def x(p):
        return np.clip(expectation(p1, p), 0.0, 1.0)

    return [
        ("square", lambda p: x(p) ** 2),
        ("cube", lambda p: x(p) ** 3),
        ("quartic", lambda p: x(p) ** 4),
        ("product", lambda p: 4 * x(p) * np.clip(expectation(p2, p), 0.0, 1.0)),
        ("bump", lambda p: 1.0 - (1.0 - x(p)) ** 2),
    ]


def field_corpus(n: int, rng: np.random.Generator, size: int = 10):
    """``size`` affine fields ``tr(T p)`` and ``size`` non-affine ones.

    Returns a list of ``(name, field, affine)``.
    """
    out = []
    for k in range(size):
        out.append((f"affine{k}", Observable(random_hermitian(n, 1.0, rng)), True))
    for k in range(size):
        a, b = random_hermitian(n, 1.0, rng), random_hermitian(n, 1.0, rng)
        kind = k % 4
        if kind == 0:
            f = (lambda a: lambda p: expectation(a, p) ** 2)(a)
        elif kind == 1:
            f = (lambda a, b: lambda p: expectation(a, p) * expectation(b, p))(a, b)
        elif kind == 2:
            f = (lambda a: lambda p: np.exp(expectation(a, p)))(a)
        else:
            f = (lambda a, b: lambda p: expectation(a, p) + 0.5 * expectation(b, p) ** 3)(a, b)
        out.append((f"nonaffine{k}", f, False))
    return out


def perturbed_projector(n: int, rng: np.random.Generator, size: float = 1e-3) -> np.ndarray:
    """A projector plus a Hermitian perturbation of operator norm ``size``."""
    p = random_projector(n, int(rng.integers(1, n + 1)), rng)
    h = random_hermitian(n, 1.0, rng)
    return p + size * h / np.linalg.norm(h, 2)


def commuting_projector_pair(n: int, rng: np.random.Generator):
    """Two random projectors diagonal in a common Haar basis."""
    u = haar_unitary(n, rng)
    d1 = rng.integers(0, 2, n).astype(complex)
    d2 = rng.integers(0, 2, n).astype(complex)
    return (u * d1) @ dagger(u), (u * d2) @ dagger(u)


def orthogonal_projector_pair(n: int, rng: np.random.Generator):
    u = haar_unitary(n, rng)
    k = int(rng.integers(1, n))
    m = int(rng.integers(k, n + 1))
    a, b = u[:, :k], u[:, k:m]
    return a @ dagger(a), b @ dagger(b)


def projector_pair_corpus(n: int, rng: np.random.Generator, size: int = 200):
    """Mixed corpus: commuting, orthogonal and generic pairs, one third each."""
    pairs = []
    for k in range(size):
        kind = k % 3
        if kind == 0:
            pairs.append(commuting_projector_pair(n, rng))
        elif kind == 1:
            pairs.append(orthogonal_projector_pair(n, rng))
        else:
            pairs.append((random_projector(n, int(rng.integers(1, n + 1)), rng),
                          random_projector(n, int(rng.integers(1, n + 1)), rng)))
    return pairs


def ordered_projector_pair(n: int, rng: np.random.Generator):
    """``P <= Q`` built from a common Haar basis with nested ranks."""
    u = haar_unitary(n, rng)
    k = int(rng.integers(0, n + 1))
    m = int(rng.integers(k, n + 1))
    return u[:, :k] @ dagger(u[:, :k]), u[:, :m] @ dagger(u[:, :m])
