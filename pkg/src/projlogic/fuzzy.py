"""Fuzzy sets on P(H): membership functions, t-norms and t-conorms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import tol
from .errors import DimensionError, InvariantError
from .operators import check_hermitian, expectation


@dataclass(frozen=True, eq=False)
class MembershipFunction:
    """A ``[0, 1]``-valued function on P(C^dim).

    Either operator-generated, ``mu(p) = tr(T p)`` with ``0 <= T <= I``, or
    given by a pointwise ``rule`` accepting stacks of points.
    """
    dim: int
    operator: np.ndarray | None = None
    rule: Callable | None = field(default=None, repr=False)

    @classmethod
    def from_operator(cls, t) -> "MembershipFunction":
        t = check_hermitian(t)
        w = np.linalg.eigvalsh(t)
        eps = tol().order
        if w[0] < -eps or w[-1] > 1 + eps:
            raise InvariantError(f"generator spectrum [{w[0]:.3g}, {w[-1]:.3g}] leaves [0, 1]")
        return cls(t.shape[0], operator=t)

    @classmethod
    def pointwise(cls, rule: Callable, dim: int) -> "MembershipFunction":
        return cls(dim, rule=rule)

    @classmethod
    def constant(cls, c: float, dim: int) -> "MembershipFunction":
        return cls.from_operator(c * np.eye(dim, dtype=complex))

    @property
    def is_operator(self) -> bool:
        return self.operator is not None

    def __call__(self, p):
        if self.operator is not None:
            return expectation(self.operator, p)
        vals = np.asarray(self.rule(p), dtype=float)
        eps = tol().grade
        if np.any(vals < -eps) or np.any(vals > 1 + eps):
            raise InvariantError("membership grade outside [0, 1]")
        return vals


def _same_universe(a: MembershipFunction, b: MembershipFunction) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"universes differ: P(C^{a.dim}) vs P(C^{b.dim})")


def complement(a: MembershipFunction) -> MembershipFunction:
    if a.is_operator:
        return MembershipFunction(a.dim, operator=np.eye(a.dim) - a.operator)
    return MembershipFunction(a.dim, rule=lambda p: 1.0 - a(p))


def fuzzy_leq(a: MembershipFunction, b: MembershipFunction, probes=None) -> bool:
    """Fuzzy inclusion ``mu_A <= mu_B`` everywhere.

    Exact for operator-generated pairs (``T_B - T_A`` positive semidefinite);
    otherwise decided on the ``probes`` points.
    """
    _same_universe(a, b)
    if a.is_operator and b.is_operator:
        return bool(np.linalg.eigvalsh(b.operator - a.operator)[0] >= -tol().order)
    if probes is None:
        raise ValueError("pointwise memberships need a probe set")
    return bool(np.all(a(probes) <= b(probes) + tol().grade))


@dataclass(frozen=True)
class TNorm:
    name: str
    rule: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(compare=False)

    def __call__(self, x, y):
        return self.rule(np.asarray(x, dtype=float), np.asarray(y, dtype=float))

    def conorm(self, x, y):
        """Dual t-conorm ``s(x, y) = 1 - t(1 - x, 1 - y)``."""
        return 1.0 - self(1.0 - np.asarray(x, dtype=float), 1.0 - np.asarray(y, dtype=float))


LUKASIEWICZ = TNorm("lukasiewicz", lambda x, y: np.maximum(x + y - 1.0, 0.0))
PRODUCT = TNorm("product", lambda x, y: x * y)

_REGISTRY: dict[str, TNorm] = {t.name: t for t in (LUKASIEWICZ, PRODUCT)}


def register_tnorm(name: str, rule: Callable) -> TNorm:
    """Extension point: make a custom t-norm available by name."""
    t = TNorm(name, rule)
    _REGISTRY[name] = t
    return t


def get_tnorm(name: str) -> TNorm:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown t-norm {name!r}; known: {sorted(_REGISTRY)}") from None


def tnorm_apply(t: TNorm, a: MembershipFunction, b: MembershipFunction) -> MembershipFunction:
    _same_universe(a, b)
    return MembershipFunction(a.dim, rule=lambda p: t(a(p), b(p)))


def tconorm_apply(t: TNorm, a: MembershipFunction, b: MembershipFunction) -> MembershipFunction:
    _same_universe(a, b)
    return MembershipFunction(a.dim, rule=lambda p: t.conorm(a(p), b(p)))


def lukasiewicz_union(a: MembershipFunction, b: MembershipFunction) -> MembershipFunction:
    """Bounded sum ``min(mu_A + mu_B, 1)`` written out directly."""
    _same_universe(a, b)
    return MembershipFunction(a.dim, rule=lambda p: np.minimum(a(p) + b(p), 1.0))


@dataclass
class TNormReport:
    name: str
    violations: dict[str, float]
    witnesses: dict[str, tuple]
    tolerance: float

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.violations.items() if v > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failed


def tnorm_axiom_check(t: TNorm, resolution: int = 101, n_random: int = 10_000,
                      rng: np.random.Generator | None = None) -> TNormReport:
    """Max violation of commutativity, monotonicity, associativity and unit.

    Evaluated on a ``resolution``-point grid of [0, 1] plus ``n_random``
    random triples.
    """
    if resolution < 11:
        raise ValueError("grid resolution must be at least 11")
    rng = np.random.default_rng(0) if rng is None else rng
    g = np.linspace(0.0, 1.0, resolution)
    x, y = np.meshgrid(g, g, indexing="ij")
    txy = t(x, y)

    viol: dict[str, float] = {}
    wit: dict[str, tuple] = {}

    def record(name, err, args):
        k = int(np.argmax(err))
        viol[name] = max(viol.get(name, 0.0), float(err.flat[k]))
        if err.flat[k] > 0 and name not in wit:
            wit[name] = tuple(float(a.flat[k]) for a in args)

    record("commutativity", np.abs(txy - t(y, x)), (x, y))
    # monotone along each axis of the sorted grid
    record("monotonicity", np.maximum(txy[:-1, :] - txy[1:, :], 0.0), (x[:-1, :], y[:-1, :]))
    record("monotonicity", np.maximum(txy[:, :-1] - txy[:, 1:], 0.0), (x[:, :-1], y[:, :-1]))
    for zi in g:
        z = np.full_like(x, zi)
        record("associativity", np.abs(t(txy, z) - t(x, t(y, z))), (x, y, z))
    record("unit", np.abs(t(g, np.ones_like(g)) - g), (g,))

    a, b, c = rng.random((3, n_random))
    record("commutativity", np.abs(t(a, b) - t(b, a)), (a, b))
    record("associativity", np.abs(t(t(a, b), c) - t(a, t(b, c))), (a, b, c))
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    record("monotonicity", np.maximum(t(lo, c) - t(hi, c), 0.0), (lo, hi, c))
    record("monotonicity", np.maximum(t(c, lo) - t(c, hi), 0.0), (c, lo, hi))
    record("unit", np.abs(t(a, np.ones_like(a)) - a), (a,))
    return TNormReport(t.name, viol, wit, tol().tnorm)


class Grade(enum.Enum):
    NOT_INCLUDED = "not_included"
    PARTIAL = "partial"
    INCLUDED = "included"


def grade_class(a: MembershipFunction, p) -> Grade:
    v = float(a(p))
    eps = tol().grade
    if v <= eps:
        return Grade.NOT_INCLUDED
    if v >= 1 - eps:
        return Grade.INCLUDED
    return Grade.PARTIAL
