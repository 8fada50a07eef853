"""Schrödinger versus Hamiltonian flows on P(H), and Liouville transport."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import tol
from .errors import StepSizeError
from .kahler import hamiltonian_vector_field
from .measure import liouville_density
from .operators import check_hermitian, check_point, dagger, nearest_point


@dataclass(frozen=True, eq=False)
class FlowResult:
    times: np.ndarray
    trajectory: np.ndarray      # (len(times), n, n)
    defect_series: np.ndarray   # unitarity defect (exact flow) or re-projection defect (RK4)

    def __post_init__(self):
        eps = tol().flow
        for p in self.trajectory:
            if abs(np.trace(p).real - 1) > eps or np.max(np.abs(p @ p - p)) > eps:
                raise ValueError("trajectory left the manifold of rank-1 projectors")


def unitary_propagator(h, t: float) -> np.ndarray:
    """``exp(-i H t)`` from the spectral decomposition of ``H``."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ dagger(v)


def schrodinger_flow(h, p0, t_grid) -> FlowResult:
    """Exact evolution ``p(t) = U_t p0 U_t^H``."""
    h, p0 = check_hermitian(h), check_point(p0)
    times = np.asarray(t_grid, dtype=float)
    n = h.shape[0]
    traj, defects = [], []
    for t in times:
        u = unitary_propagator(h, t)
        defects.append(float(np.max(np.abs(u @ dagger(u) - np.eye(n)))))
        traj.append(u @ p0 @ dagger(u))
    defects = np.array(defects)
    if np.max(defects) > tol().unitary:
        raise ValueError(f"propagator unitarity defect {np.max(defects):.3g}")
    return FlowResult(times, np.array(traj), defects)


def _velocity(h, p):
    # value of the Hamiltonian vector field of f_H; valid off the manifold too
    return -1j * (h @ p - p @ h)


def rk4_step(h, p, dt: float):
    k1 = _velocity(h, p)
    k2 = _velocity(h, p + 0.5 * dt * k1)
    k3 = _velocity(h, p + 0.5 * dt * k2)
    k4 = _velocity(h, p + dt * k3)
    return p + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def hamilton_flow(h, p0, t_grid, dt: float) -> FlowResult:
    """Classic RK4 on ``dp/dt = X_{f_H}(p)`` with rank-1 re-projection per step.

    Each interval of ``t_grid`` is split into equal steps no longer than ``dt``.
    """
    h, p0 = check_hermitian(h), check_point(p0)
    hnorm = np.linalg.norm(h, 2)
    if hnorm > 0 and dt > 1e-2 / hnorm * (1 + 1e-12):
        raise StepSizeError(f"dt = {dt} exceeds 1e-2 / ||H|| = {1e-2 / hnorm}")
    # the RK4 velocity must be the certified Hamiltonian field at the start point
    x0 = hamiltonian_vector_field(h, p0)
    if np.max(np.abs(x0.value - _velocity(h, p0))) > tol().tangency:
        raise ValueError("velocity field does not match the Hamiltonian vector field")

    times = np.asarray(t_grid, dtype=float)
    p = p0
    traj, defects = [], []
    t_now = times[0] if times.size else 0.0
    worst = 0.0
    for t in times:
        span = t - t_now
        steps = int(np.ceil(abs(span) / dt - 1e-9)) if span else 0
        for _ in range(steps):
            raw = rk4_step(h, p, span / steps)
            p = nearest_point(raw)
            d = float(np.max(np.abs(raw - p)))
            if d > tol().reproject:
                raise StepSizeError(f"re-projection defect {d:.3g}; reduce dt")
            worst = max(worst, d)
        t_now = t
        traj.append(p)
        defects.append(worst)
        worst = 0.0
    return FlowResult(times, np.array(traj), np.array(defects))


def max_flow_deviation(a: FlowResult, b: FlowResult) -> float:
    """Max operator-norm distance between two trajectories on the same grid."""
    return float(max(np.linalg.norm(x - y, 2) for x, y in zip(a.trajectory, b.trajectory)))


def liouville_transport_check(sigma0, h, t: float, probes) -> float:
    """Max over probes of ``|rho_{sigma_t}(p) - rho_{sigma_0}(U_t^H p U_t)|``."""
    u = unitary_propagator(check_hermitian(h), t)
    rho0 = liouville_density(sigma0, certify=False)
    rho_t = liouville_density(u @ rho0.sigma @ dagger(u), certify=False)
    pulled = dagger(u) @ probes @ u
    return float(np.max(np.abs(rho_t(probes) - rho0(pulled))))
