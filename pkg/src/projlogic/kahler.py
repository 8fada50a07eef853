"""Kähler geometry of the projective space P(H).

Tangent vectors at a point ``p`` are Hermitian matrices ``v = -i[A, p]``.
The generator ``A`` is only defined up to operators commuting with ``p``;
:func:`tangent_from_generator` fixes the canonical choice ``A = i[v, p]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import tol
from .errors import CertificationError, DimensionError, InvariantError, RankDeficientError
from .operators import (
    commutator, dagger, expectation, haar_random_basis, haar_random_points,
    nearest_point, random_hermitian,
)

ScalarField = Callable[[np.ndarray], np.ndarray]
"""A real function on P(H). Fields receive a stack of points ``(..., n, n)``."""


@dataclass(frozen=True, eq=False)
class TangentVector:
    base: np.ndarray
    generator: np.ndarray
    value: np.ndarray

    def __add__(self, other: "TangentVector") -> "TangentVector":
        _same_base(self, other)
        return tangent_from_generator(self.base, self.generator + other.generator)

    def __mul__(self, c: float) -> "TangentVector":
        return tangent_from_generator(self.base, c * self.generator)

    __rmul__ = __mul__

    def __neg__(self) -> "TangentVector":
        return self * -1.0

    def validate(self) -> "TangentVector":
        t = tol()
        p, v = self.base, self.value
        if np.max(np.abs(v - dagger(v))) > t.tangent or abs(np.trace(v)) > t.tangent:
            raise InvariantError("tangent value must be Hermitian and traceless")
        if np.max(np.abs(v - v @ p - p @ v)) > t.tangency or np.max(np.abs(p @ v @ p)) > t.tangency:
            raise InvariantError("value is not tangent to the rank-1 projector manifold")
        return self


@dataclass(frozen=True, eq=False)
class Observable:
    """The phase-space function ``f_A(p) = tr(A p)``."""
    op: np.ndarray

    def __call__(self, p):
        return expectation(self.op, p)


def _same_base(u: TangentVector, v: TangentVector) -> None:
    if u.base is not v.base and not np.array_equal(u.base, v.base):
        raise DimensionError("tangent vectors live at different base points")


def tangent_from_generator(p, a) -> TangentVector:
    """Tangent vector ``-i[A, p]`` with its canonical generator ``i[v, p]``.

    Any ``A'`` with ``[A' - A, p] = 0`` produces the same vector.
    """
    if p.shape != a.shape:
        raise DimensionError("generator and base point differ in dimension")
    v = -1j * commutator(a, p)
    return TangentVector(base=p, generator=1j * commutator(v, p), value=v)


def _real_trace(z: complex, scale: float = 1.0) -> float:
    if abs(z.imag) > tol().imag * max(1.0, scale):
        raise CertificationError(f"expected a real trace, imaginary residue {z.imag:.3g}")
    return float(z.real)


def symplectic_form(u: TangentVector, v: TangentVector) -> float:
    """``omega_p(u, v) = -i tr([A_u, A_v] p)``."""
    _same_base(u, v)
    z = -1j * np.trace(commutator(u.generator, v.generator) @ u.base)
    return _real_trace(z, np.linalg.norm(u.generator) * np.linalg.norm(v.generator))


def fubini_study_metric(u: TangentVector, v: TangentVector) -> float:
    """``g_p(u, v) = -tr(([A_u, p][A_v, p] + [A_v, p][A_u, p]) p)``."""
    _same_base(u, v)
    p = u.base
    cu, cv = commutator(u.generator, p), commutator(v.generator, p)
    z = -np.trace((cu @ cv + cv @ cu) @ p)
    return _real_trace(z, np.linalg.norm(cu) * np.linalg.norm(cv))


def complex_structure(v: TangentVector) -> TangentVector:
    """``j_p(v) = i[v, p]``, a tangent vector at the same base point."""
    jv = 1j * commutator(v.value, v.base)
    return TangentVector(base=v.base, generator=1j * commutator(jv, v.base), value=jv)


def kahler_defect(u: TangentVector, v: TangentVector) -> float:
    """``|g(u, v) - omega(u, j v)|``, zero when metric, form and j are compatible."""
    return abs(fubini_study_metric(u, v) - symplectic_form(u, complex_structure(v)))


def directional_derivative(a, v: TangentVector) -> float:
    """Analytic derivative of ``f_A`` along ``v``: ``tr(A v)``."""
    return float(expectation(a, v.value))


def directional_derivative_fd(field: ScalarField, v: TangentVector, step: float | None = None) -> float:
    """Central difference of ``field`` along ``p +- h v``, re-projected to rank 1."""
    h = tol().fd_step if step is None else step
    p = v.base
    plus = nearest_point(p + h * v.value)
    minus = nearest_point(p - h * v.value)
    return float((field(plus) - field(minus)) / (2 * h))


def random_tangent(p, rng: np.random.Generator, scale: float = 1.0) -> TangentVector:
    return tangent_from_generator(p, random_hermitian(p.shape[0], scale, rng))


def hamiltonian_vector_field(f: Observable | np.ndarray, p, rng: np.random.Generator | None = None,
                             n_probes: int = 20) -> TangentVector:
    """Hamiltonian vector field of ``f_A`` at ``p``, certified on random probes.

    The certificate is the defining identity ``omega(X_f, Y) = df(Y)`` with
    ``df`` evaluated analytically.
    """
    a = f.op if isinstance(f, Observable) else np.asarray(f)
    x = tangent_from_generator(p, a)
    rng = np.random.default_rng(0) if rng is None else rng
    for _ in range(n_probes):
        y = random_tangent(p, rng)
        err = abs(symplectic_form(x, y) - directional_derivative(a, y))
        if err > tol().hamiltonian:
            raise CertificationError(f"omega(X_f, Y) != df(Y), defect {err:.3g}")
    return x


def poisson_bracket(a, b, p) -> float:
    """``{f_A, f_B}(p) = -i tr([A, B] p)``, cross-checked against ``omega(X_A, X_B)``."""
    z = -1j * np.trace(commutator(a, b) @ p)
    value = _real_trace(z, np.linalg.norm(a) * np.linalg.norm(b))
    geometric = symplectic_form(tangent_from_generator(p, a), tangent_from_generator(p, b))
    if abs(value - geometric) > tol().poisson * max(1.0, abs(value)):
        raise CertificationError(f"Poisson bracket {value} disagrees with omega {geometric}")
    return value


def poisson_bracket_fd(a, field: ScalarField, p, step: float | None = None) -> float:
    """``{f_A, k}(p)`` for an arbitrary smooth ``k``, as ``-dk(X_A)`` by finite differences."""
    return -directional_derivative_fd(field, tangent_from_generator(p, a), step)


def hermitian_basis(n: int) -> np.ndarray:
    """The n^2 real-orthogonal Hermitian matrices E_kk, E_jk + E_kj, i(E_jk - E_kj)."""
    basis = []
    for k in range(n):
        e = np.zeros((n, n), dtype=complex)
        e[k, k] = 1
        basis.append(e)
    for j in range(n):
        for k in range(j + 1, n):
            s = np.zeros((n, n), dtype=complex)
            s[j, k] = s[k, j] = 1
            a = np.zeros((n, n), dtype=complex)
            a[j, k], a[k, j] = -1j, 1j
            basis.extend((s, a))
    return np.array(basis)


def observable_fit(mu: ScalarField, n: int, n_samples: int | None, rng: np.random.Generator):
    """Least-squares fit ``mu(p) ~ tr(T p)`` over Haar samples.

    Returns ``(T, residual)`` where ``residual`` is the RMS misfit. A field is
    observable-type when the residual is below ``tol().observable``.
    """
    n_samples = n * n + 32 if n_samples is None else n_samples
    if n_samples < n * n + 10:
        raise ValueError(f"need at least n^2 + 10 = {n * n + 10} samples")
    pts = haar_random_points(n, n_samples, rng)
    basis = hermitian_basis(n)
    design = np.einsum("mij,kji->km", basis, pts).real
    target = np.asarray(mu(pts), dtype=float)
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < n * n:
        raise RankDeficientError(f"design matrix rank {rank} < {n * n}")
    t = np.einsum("m,mij->ij", coef, basis)
    residual = float(np.sqrt(np.mean((design @ coef - target) ** 2)))
    return t, residual


def is_observable_type(mu: ScalarField, n: int, rng: np.random.Generator) -> bool:
    return observable_fit(mu, n, None, rng)[1] < tol().observable


def frame_function_deviation(mu: ScalarField, n: int, n_bases: int, rng: np.random.Generator) -> float:
    """Spread of ``sum_i mu([psi_i])`` over Haar-random orthonormal bases."""
    if n_bases < 2:
        raise ValueError("need at least two bases")
    sums = np.empty(n_bases)
    for b in range(n_bases):
        u = haar_random_basis(n, rng)
        pts = np.einsum("ik,jk->kij", u, u.conj())
        sums[b] = np.sum(mu(pts))
    return float(np.max(np.abs(sums - sums.mean())))


def basis_sum_deviation(mu: ScalarField, bases) -> float:
    """Frame-sum spread over explicitly given bases (columns of each matrix)."""
    sums = np.array([np.sum(mu(np.einsum("ik,jk->kij", u, u.conj()))) for u in bases])
    return float(np.max(np.abs(sums - sums.mean())))
