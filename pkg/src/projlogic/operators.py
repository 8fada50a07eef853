"""Dense Hermitian operator algebra on a small Hilbert space C^n.

Operators are plain ``numpy`` complex arrays of shape ``(n, n)``; projective
points are rank-1 projectors ``|psi><psi|``. The projector lattice
operations here are the ground truth the fuzzy logic layer is checked against.
"""

from __future__ import annotations

import numpy as np

from .config import tol
from .errors import DimensionError, InvariantError, NonHermitianError

__all__ = [
    "PAULI_X", "PAULI_Y", "PAULI_Z",
    "dagger", "commutator", "anticommutator", "expectation",
    "hermitian_defect", "make_hermitian", "is_hermitian",
    "is_projector", "is_point", "is_density", "is_orthonormal",
    "check_hermitian", "check_projector", "check_point", "check_density",
    "point_from_vector", "projector_onto", "basis_vector",
    "haar_state_vectors", "haar_random_point", "haar_random_points",
    "haar_unitary", "haar_random_basis", "random_hermitian",
    "random_projector", "random_density", "nearest_point", "eigenvector_points",
    "projector_leq", "lattice_meet", "lattice_join", "orthocomplement",
    "compatibility_decomposition",
]

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def dagger(a):
    return np.conj(np.swapaxes(a, -1, -2))


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def expectation(a, p):
    """Real part of ``tr(a p)``; ``p`` may be a stack of shape ``(..., n, n)``."""
    return np.einsum("ij,...ji->...", a, p).real


def _as_square(raw) -> np.ndarray:
    a = np.asarray(raw, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def _same_dim(*ops) -> int:
    dims = {op.shape[-1] for op in ops}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def hermitian_defect(raw) -> float:
    """Max entry distance between ``raw`` and its Hermitian part."""
    a = _as_square(raw)
    return float(np.max(np.abs(a - dagger(a)))) / 2.0


def make_hermitian(raw) -> np.ndarray:
    """Return the Hermitian part ``(raw + raw^H) / 2``.

    Raises
    ------
    DimensionError
        If ``raw`` is not square.
    NonHermitianError
        If the symmetrization defect exceeds ``tol().herm_reject``; such a
        matrix is treated as corrupt input rather than silently repaired.
    """
    a = _as_square(raw)
    defect = hermitian_defect(a)
    if defect > tol().herm_reject:
        raise NonHermitianError(f"symmetrization defect {defect:.3g} exceeds "
                                f"{tol().herm_reject:.3g}")
    return (a + dagger(a)) / 2.0


def is_hermitian(a) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and \
        float(np.max(np.abs(a - dagger(a)), initial=0.0)) <= tol().herm


def is_projector(a) -> bool:
    if not is_hermitian(a):
        return False
    t = tol()
    if np.max(np.abs(a @ a - a), initial=0.0) > t.idem:
        return False
    w = np.linalg.eigvalsh(a)
    return bool(np.all(np.minimum(np.abs(w), np.abs(w - 1)) <= t.eig01))


def is_point(a) -> bool:
    return is_projector(a) and abs(np.trace(a).real - 1.0) <= tol().trace


def is_density(a) -> bool:
    if not is_hermitian(a):
        return False
    t = tol()
    return bool(np.linalg.eigvalsh(a)[0] >= -t.psd and abs(np.trace(a).real - 1) <= t.trace)


def is_orthonormal(vectors) -> bool:
    """``vectors`` holds basis vectors as columns."""
    v = np.asarray(vectors)
    gram = dagger(v) @ v
    return bool(np.max(np.abs(gram - np.eye(v.shape[1]))) <= tol().ortho)


def _checker(pred, kind):
    def check(a):
        a = np.asarray(a, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {a.shape}")
        if not pred(a):
            raise InvariantError(f"matrix is not a valid {kind}")
        return a
    check.__name__ = f"check_{kind.replace(' ', '_')}"
    check.__doc__ = f"Return ``a`` as a complex array, raising InvariantError unless it is a {kind}."
    return check


check_hermitian = _checker(is_hermitian, "hermitian operator")
check_projector = _checker(is_projector, "projector")
check_point = _checker(is_point, "projective point")
check_density = _checker(is_density, "density matrix")


def point_from_vector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def basis_vector(n: int, k: int) -> np.ndarray:
    e = np.zeros(n, dtype=complex)
    e[k] = 1.0
    return e


def projector_onto(*vectors) -> np.ndarray:
    """Orthogonal projector onto the span of the given vectors."""
    v = np.column_stack([np.asarray(x, dtype=complex) for x in vectors])
    q, r = np.linalg.qr(v)
    keep = np.abs(np.diag(r)) > tol().rank
    q = q[:, keep]
    return q @ dagger(q)


def haar_state_vectors(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Unit vectors, shape ``(size, n)``, uniform on the sphere of C^n."""
    z = rng.standard_normal((size, n)) + 1j * rng.standard_normal((size, n))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_random_points(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` points of P(C^n) drawn from the unitarily invariant measure."""
    if n < 2:
        raise DimensionError("projective space needs n >= 2")
    psi = haar_state_vectors(n, size, rng)
    return psi[:, :, None] * psi.conj()[:, None, :]


def haar_random_point(n: int, rng: np.random.Generator) -> np.ndarray:
    return haar_random_points(n, 1, rng)[0]


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def haar_random_basis(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random orthonormal basis, vectors as columns."""
    return haar_unitary(n, rng)


def random_hermitian(n: int, scale: float, rng: np.random.Generator) -> np.ndarray:
    """GUE-style draw: Hermitian part of a complex Gaussian matrix, times ``scale``."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (z + dagger(z)) / 2.0


def random_projector(n: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    if not 1 <= rank <= n:
        raise ValueError(f"rank must lie in [1, {n}], got {rank}")
    q = haar_unitary(n, rng)[:, :rank]
    return q @ dagger(q)


def random_density(n: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    rank = n if rank is None else rank
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ dagger(g)
    return rho / np.trace(rho).real


def nearest_point(a) -> np.ndarray:
    """Rank-1 projector on the dominant eigenvector of the Hermitian part of ``a``."""
    a = np.asarray(a, dtype=complex)
    _, v = np.linalg.eigh((a + dagger(a)) / 2.0)
    psi = v[:, -1]
    return np.outer(psi, psi.conj())


def eigenvector_points(*ops) -> np.ndarray:
    """All eigenvector rank-1 projectors of the given Hermitian operators."""
    pts = []
    for op in ops:
        _, v = np.linalg.eigh(op)
        pts.extend(np.outer(v[:, k], v[:, k].conj()) for k in range(v.shape[1]))
    return np.array(pts)


def projector_leq(p, q) -> bool:
    """Range inclusion ``P <= Q``, decided by ``Q - P`` being positive semidefinite."""
    _same_dim(p, q)
    return bool(np.linalg.eigvalsh(q - p)[0] >= -tol().order)


def orthocomplement(p) -> np.ndarray:
    return np.eye(p.shape[0]) - p


def lattice_meet(p, q) -> np.ndarray:
    """Projector onto ran(P) and ran(Q), i.e. the kernel of ``2I - P - Q``."""
    n = _same_dim(p, q)
    w, v = np.linalg.eigh(2 * np.eye(n) - p - q)
    k = v[:, w < tol().rank]
    return k @ dagger(k)


def lattice_join(p, q) -> np.ndarray:
    return orthocomplement(lattice_meet(orthocomplement(p), orthocomplement(q)))


def compatibility_decomposition(p, q):
    """Split a commuting pair as ``P = r1 v r3``, ``Q = r2 v r3``.

    Returns ``(r1, r2, r3)`` with ``r3 = P ^ Q``, ``r1 = P ^ ~Q``,
    ``r2 = ~P ^ Q``, or ``None`` when the pair does not commute.
    """
    _same_dim(p, q)
    t = tol()
    if np.max(np.abs(commutator(p, q))) > t.commute:
        return None
    r3 = lattice_meet(p, q)
    r1 = lattice_meet(p, orthocomplement(q))
    r2 = lattice_meet(orthocomplement(p), q)
    for a, b in ((r1, r2), (r1, r3), (r2, r3)):
        if np.max(np.abs(a @ b)) > t.lattice:
            raise InvariantError("decomposition parts are not orthogonal")
    if (np.max(np.abs(lattice_join(r1, r3) - p)) > t.lattice
            or np.max(np.abs(lattice_join(r2, r3) - q)) > t.lattice):
        raise InvariantError("decomposition does not reassemble the pair")
    return r1, r2, r3
