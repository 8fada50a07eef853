"""Centralized numerical tolerances.

Every threshold used by the library is read from the active
:class:`Tolerances` record, so a whole verification run can be repeated at
tighter or looser settings::

    with use_tolerances(lattice=1e-7):
        ...
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    herm: float = 1e-12          # max |A - A^H| entry for HermitianOperator
    herm_reject: float = 1e-6    # symmetrization defect that signals corrupt input
    idem: float = 1e-10          # max |T T - T| entry for Projector
    eig01: float = 1e-8          # projector eigenvalues within this of {0, 1}
    trace: float = 1e-10         # trace checks (points, densities)
    psd: float = 1e-10           # min eigenvalue for density matrices
    ortho: float = 1e-10         # orthonormal basis inner products
    rank: float = 1e-8           # eigenvalue threshold for rank / kernel decisions
    order: float = 1e-9          # projector_leq / fuzzy_leq eigenvalue slack
    commute: float = 1e-9        # commutator entries for compatibility
    lattice: float = 1e-9        # lattice identities (De Morgan, orthomodularity)
    tangent: float = 1e-10       # tangent vector Hermiticity / trace
    tangency: float = 1e-9       # v = vp + pv and pvp = 0
    imag: float = 1e-10          # discarded imaginary residue of real traces
    gauge: float = 1e-10         # gauge invariance of omega, g
    complex_structure: float = 1e-9
    kahler: float = 1e-8
    hamiltonian: float = 1e-8    # omega(X_f, Y) = df(Y) certification
    poisson: float = 1e-9        # closed form vs omega(X_f, X_h)
    fd: float = 1e-6             # finite-difference agreement
    fd_step: float = 1e-5
    observable: float = 1e-6     # observable_fit residual threshold
    frame: float = 1e-8          # frame function deviation for observables
    oracle: float = 1e-12        # exact oracle identities
    reproducing: float = 1e-9
    mc_sigma: float = 4.0        # Monte Carlo acceptance band, in standard errors
    grade: float = 1e-10         # membership values inside [0, 1]
    tnorm: float = 1e-12         # t-norm axiom violations
    probe: float = 1e-9          # probe-based star checks
    operator_cert: float = 1e-8  # operator-norm certification of probe checks
    star: float = 1e-9           # closed vs geometric star product
    gpm: float = 1e-9
    flow: float = 1e-8           # trajectory points remain rank-1 projectors
    reproject: float = 1e-6      # max re-projection defect per RK4 step
    unitary: float = 1e-12
    transport: float = 1e-10

    def replace(self, **overrides: float) -> "Tolerances":
        unknown = set(overrides) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise KeyError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
        return dataclasses.replace(self, **{k: float(v) for k, v in overrides.items()})


DEFAULT_TOLERANCES = Tolerances()

_active: contextvars.ContextVar[Tolerances] = contextvars.ContextVar(
    "projlogic_tolerances", default=DEFAULT_TOLERANCES
)


def tol() -> Tolerances:
    """Return the tolerance record active in the current context."""
    return _active.get()


@contextlib.contextmanager
def use_tolerances(base: Tolerances | None = None, **overrides: float):
    """Temporarily activate ``base`` (default: current) with ``overrides``."""
    record = (base or tol()).replace(**overrides)
    token = _active.set(record)
    try:
        yield record
    finally:
        _active.reset(token)
