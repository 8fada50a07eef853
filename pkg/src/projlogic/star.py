"""The non-commutative star product on observable-type membership functions
and the quantum logic of star-idempotent fuzzy events.

For ``mu_k(p) = tr(T_k p)`` the product ``mu_1 * mu_2`` equals
``tr(T_1 T_2 p)``; :func:`star_geometric` rebuilds it from the pointwise
product, the Poisson bracket and the Fubini-Study metric and serves as the
cross-check of that closed form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .config import tol
from .errors import CertificationError, DimensionError, IncompatibleError, InvariantError, ProjLogicError
from .fuzzy import MembershipFunction
from .kahler import fubini_study_metric, hamiltonian_vector_field, poisson_bracket
from .operators import (
    check_projector, commutator, eigenvector_points, expectation, haar_random_points,
    is_projector, lattice_join, lattice_meet, orthocomplement, projector_leq,
)

FAMILY_CAP = 64


@dataclass(frozen=True, eq=False)
class FuzzyEvent:
    """Operator-generated fuzzy event ``mu(p) = tr(T p)`` with ``0 <= T <= I``."""
    generator: np.ndarray
    label: str = ""
    projector: bool = field(default=False)

    @classmethod
    def from_operator(cls, t, label: str = "") -> "FuzzyEvent":
        mu = MembershipFunction.from_operator(t)
        flag = is_projector(mu.operator)
        if flag and np.linalg.norm(mu.operator @ mu.operator - mu.operator, 2) > tol().operator_cert:
            raise InvariantError("projector flag set but T^2 != T")
        return cls(mu.operator, label, flag)

    @property
    def dim(self) -> int:
        return self.generator.shape[0]

    @property
    def membership(self) -> MembershipFunction:
        return MembershipFunction(self.dim, operator=self.generator)

    def __call__(self, p):
        return expectation(self.generator, p)


def _gen(a) -> np.ndarray:
    return a.generator if isinstance(a, FuzzyEvent) else np.asarray(a, dtype=complex)


def star_values(ta, tb, points) -> np.ndarray:
    """Closed form ``tr(T_A T_B p)`` on a stack of points (complex)."""
    return np.einsum("ij,...ji->...", ta @ tb, points)


def star_geometric(ta, tb, p) -> complex:
    """``f g + (i/2) {f, g} + (1/2) g_FS(X_f, X_g)`` at a single point."""
    f, h = expectation(ta, p), expectation(tb, p)
    xa = hamiltonian_vector_field(ta, p, n_probes=0)
    xb = hamiltonian_vector_field(tb, p, n_probes=0)
    return f * h + 0.5j * poisson_bracket(ta, tb, p) + 0.5 * fubini_study_metric(xa, xb)


@dataclass(frozen=True, eq=False)
class StarField:
    """The complex field ``p -> (mu_A * mu_B)(p)``."""
    ta: np.ndarray
    tb: np.ndarray

    def __call__(self, p):
        return star_values(self.ta, self.tb, p)

    def geometric(self, p) -> complex:
        return star_geometric(self.ta, self.tb, p)

    def deviation(self, probes) -> float:
        """Max distance between closed and geometric forms over ``probes``."""
        closed = self(probes)
        return float(max(abs(closed[k] - self.geometric(probes[k])) for k in range(len(probes))))


def star(a, b, probes=None) -> StarField:
    """Star product of two operator-generated events.

    When ``probes`` is given, the closed form is cross-validated against the
    geometric three-term form at each probe point.
    """
    ta, tb = _gen(a), _gen(b)
    if ta.shape != tb.shape:
        raise DimensionError("events live on different spaces")
    s = StarField(ta, tb)
    if probes is not None:
        dev = s.deviation(probes)
        if dev > tol().star:
            raise CertificationError(f"star closed form deviates from geometric form by {dev:.3g}")
    return s


def probe_points(generators: Sequence, rng: np.random.Generator, n_random: int = 64) -> np.ndarray:
    """Haar points plus every eigenvector point of the generators."""
    gens = [_gen(g) for g in generators]
    n = gens[0].shape[0]
    return np.concatenate([haar_random_points(n, n_random, rng), eigenvector_points(*gens)])


def _default_probes(*events) -> np.ndarray:
    return probe_points(events, np.random.default_rng(0))


def _opnorm(a) -> float:
    return float(np.linalg.norm(a, 2))


def _certified(probe_answer: bool, operator_answer: bool, what: str) -> bool:
    if probe_answer != operator_answer:
        raise CertificationError(f"probe and operator tests disagree on {what}")
    return probe_answer


def is_idempotent(a, probes=None) -> bool:
    """``mu * mu = mu`` on the probes, certified against ``||T^2 - T||``."""
    t = _gen(a)
    probes = _default_probes(t) if probes is None else probes
    dev = np.max(np.abs(star_values(t, t, probes) - expectation(t, probes)))
    return _certified(bool(dev < tol().probe), _opnorm(t @ t - t) < tol().operator_cert, "idempotence")


def _require_idempotent(*ts) -> None:
    for t in ts:
        if _opnorm(t @ t - t) >= tol().operator_cert:
            raise ProjLogicError("compatibility and orthogonality need star-idempotent events")


def is_compatible(a, b, probes=None) -> bool:
    """Star-commutation ``mu_A * mu_B = mu_B * mu_A``, certified by ``[T_A, T_B] = 0``."""
    ta, tb = _gen(a), _gen(b)
    _require_idempotent(ta, tb)
    probes = _default_probes(ta, tb) if probes is None else probes
    dev = np.max(np.abs(star_values(ta, tb, probes) - star_values(tb, ta, probes)))
    return _certified(bool(dev < tol().probe), _opnorm(commutator(ta, tb)) < tol().operator_cert,
                      "compatibility")


def is_orthogonal(a, b, probes=None) -> bool:
    """``mu_A * mu_B = 0``, certified by ``T_A T_B = 0``."""
    ta, tb = _gen(a), _gen(b)
    _require_idempotent(ta, tb)
    probes = _default_probes(ta, tb) if probes is None else probes
    dev = np.max(np.abs(star_values(ta, tb, probes)))
    return _certified(bool(dev < tol().probe), _opnorm(ta @ tb) < tol().operator_cert, "orthogonality")


def join_meet_membership(a, b, probes=None):
    """Join ``mu_A + mu_B - mu_A * mu_B`` and meet ``mu_A * mu_B`` of a compatible pair."""
    ta, tb = _gen(a), _gen(b)
    if not is_compatible(ta, tb, probes):
        raise IncompatibleError("star join/meet are only defined for compatible events")
    prod = ta @ tb
    meet = (prod + prod.conj().T) / 2
    join = ta + tb - meet
    t = tol()
    for got, oracle, name in ((meet, lattice_meet(ta, tb), "meet"), (join, lattice_join(ta, tb), "join")):
        if not is_projector(got) or np.max(np.abs(got - oracle)) > t.lattice:
            raise CertificationError(f"star {name} disagrees with the projector lattice")
    return FuzzyEvent(join, projector=True), FuzzyEvent(meet, projector=True)


def join_meet(a, b, probes=None):
    """``(join, meet, path)``; incompatible pairs fall back to the projector lattice.

    ``path`` is ``"star"`` or ``"operator-lattice"``.
    """
    ta, tb = _gen(a), _gen(b)
    try:
        j, m = join_meet_membership(ta, tb, probes)
        return j, m, "star"
    except IncompatibleError:
        return (FuzzyEvent(lattice_join(ta, tb), projector=True),
                FuzzyEvent(lattice_meet(ta, tb), projector=True), "operator-lattice")


def order_iso_h(p, label: str = "") -> FuzzyEvent:
    """Projector ``T`` to the fuzzy event ``p -> tr(T p)``."""
    return FuzzyEvent.from_operator(check_projector(p), label)


def order_iso_h_inverse(event: FuzzyEvent) -> np.ndarray:
    return event.generator


# ---------------------------------------------------------------- structures

def _find(gens: np.ndarray, m, eps: float) -> int:
    hit = np.flatnonzero(np.max(np.abs(gens - m), axis=(1, 2)) < eps)
    return int(hit[0]) if hit.size else -1


def close_family(family: Sequence, labels: Sequence[str] | None = None):
    """Adjoin 0, I and all orthocomplements; drop duplicates.

    Returns ``(generators, labels)``.
    """
    gens = [_gen(f) for f in family]
    if labels is None:
        labels = [f.label if isinstance(f, FuzzyEvent) and f.label else f"P{k}" for k, f in enumerate(family)]
    n = gens[0].shape[0]
    out, names = [np.zeros((n, n), dtype=complex), np.eye(n, dtype=complex)], ["0", "I"]
    eps = tol().rank
    for g, name in zip(gens, labels):
        for m, lab in ((g, name), (orthocomplement(g), f"~{name}")):
            if _find(np.array(out), m, eps) < 0:
                out.append(np.asarray(m, dtype=complex))
                names.append(lab)
    return np.array(out), names


def cliques(adjacency: np.ndarray, candidates: Sequence[int], max_size: int):
    """All cliques of size >= 2 and <= ``max_size`` among ``candidates``."""
    cand = list(candidates)

    def grow(clique, rest):
        for k, v in enumerate(rest):
            new = clique + [v]
            if len(new) >= 2:
                yield tuple(new)
            if len(new) < max_size:
                yield from grow(new, [w for w in rest[k + 1:] if adjacency[v, w]])

    yield from grow([], cand)


@dataclass(eq=False)
class QuantumLogicStructure:
    elements: list[FuzzyEvent]
    order: np.ndarray          # order[i, j]: element i <= element j
    complement: np.ndarray
    compat: np.ndarray
    orth: np.ndarray
    meet: np.ndarray           # index into elements, -1 when outside the family
    join: np.ndarray
    star_path: np.ndarray      # True where meet/join came from the star formulas
    probes: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.elements]

    @property
    def generators(self) -> np.ndarray:
        return np.array([e.generator for e in self.elements])

    def index(self, m) -> int:
        return _find(self.generators, _gen(m), tol().rank)

    @property
    def zero(self) -> int:
        return self.index(np.zeros((self.dim, self.dim)))

    @property
    def one(self) -> int:
        return self.index(np.eye(self.dim))

    def validate(self) -> "QuantumLogicStructure":
        o = self.order
        m = self.size
        if not np.all(np.diag(o)):
            raise InvariantError("order is not reflexive")
        if np.any(o & o.T & ~np.eye(m, dtype=bool)):
            raise InvariantError("order is not antisymmetric")
        if np.any((o.astype(int) @ o.astype(int) > 0) & ~o):
            raise InvariantError("order is not transitive")
        c = self.complement
        if np.any(c[c] != np.arange(m)):
            raise InvariantError("complement is not an involution")
        if np.any(o & ~o[np.ix_(c, c)].T):
            raise InvariantError("complement does not reverse order")
        if np.any(self.compat != self.compat.T) or np.any(self.orth != self.orth.T):
            raise InvariantError("compatibility / orthogonality not symmetric")
        if np.any(self.orth & ~self.compat):
            raise InvariantError("orthogonal pair that is not compatible")
        return self


def build_logic(family: Sequence, labels: Sequence[str] | None = None,
                rng: np.random.Generator | None = None) -> QuantumLogicStructure:
    """Close ``family`` under complement, adjoin 0 and I and tabulate the logic.

    Meets and joins of compatible pairs use the star formulas; incompatible
    pairs use the projector lattice and are flagged in ``star_path``.
    """
    for f in family:
        check_projector(_gen(f))
    gens, names = close_family(family, labels)
    m = len(gens)
    if m > FAMILY_CAP:
        raise ProjLogicError(f"closed family has {m} elements, cap is {FAMILY_CAP}")
    probes = probe_points(gens, np.random.default_rng(0) if rng is None else rng)
    elements = [FuzzyEvent(g, lab, True) for g, lab in zip(gens, names)]
    eps = tol().rank

    order = np.array([[projector_leq(a, b) for b in gens] for a in gens])
    complement = np.array([_find(gens, orthocomplement(g), eps) for g in gens])
    compat = np.zeros((m, m), dtype=bool)
    orth = np.zeros((m, m), dtype=bool)
    meet = np.full((m, m), -1)
    join = np.full((m, m), -1)
    star_path = np.zeros((m, m), dtype=bool)
    for i, j in itertools.combinations_with_replacement(range(m), 2):
        compat[i, j] = compat[j, i] = is_compatible(gens[i], gens[j], probes)
        orth[i, j] = orth[j, i] = is_orthogonal(gens[i], gens[j], probes)
        jn, mt, path = join_meet(gens[i], gens[j], probes)
        meet[i, j] = meet[j, i] = _find(gens, mt.generator, eps)
        join[i, j] = join[j, i] = _find(gens, jn.generator, eps)
        star_path[i, j] = star_path[j, i] = path == "star"
    return QuantumLogicStructure(elements, order, complement, compat, orth, meet, join,
                                 star_path, probes).validate()


class _Lattice:
    """Projector meet/join on arbitrary matrices, cached by rounded content."""

    def __init__(self):
        self._cache: dict = {}

    @staticmethod
    def _key(a):
        return np.round(a, 9).tobytes()

    def _op(self, name, fn, a, b):
        key = (name, self._key(a), self._key(b))
        if key not in self._cache:
            self._cache[key] = fn(a, b)
        return self._cache[key]

    def meet(self, a, b):
        return self._op("m", lattice_meet, a, b)

    def join(self, a, b):
        return self._op("j", lattice_join, a, b)


@dataclass
class LogicReport:
    size: int
    bounded: bool
    orthocomplement_error: float
    orthomodular_error: float
    orthomodular_pairs: int
    sigma_orthocomplete: bool
    sigma_failures: list = field(default_factory=list)
    distributive: bool = True
    distributivity_witnesses: list = field(default_factory=list)
    tolerance: float = 0.0

    @property
    def passed(self) -> bool:
        return (self.bounded and self.orthocomplement_error <= self.tolerance
                and self.orthomodular_error <= self.tolerance and self.sigma_orthocomplete)


def check_quantum_logic_axioms(L: QuantumLogicStructure, max_family: int = 6,
                               max_witnesses: int = 1000) -> LogicReport:
    """Boundedness, orthocomplementation, orthomodularity, sigma-orthocompleteness
    and distributivity (with witness triples) of a built structure."""
    gens = L.generators
    n = L.dim
    lat = _Lattice()
    zero, one = np.zeros((n, n)), np.eye(n)
    z, u = L.zero, L.one
    bounded = z >= 0 and u >= 0 and bool(np.all(L.order[z, :]) and np.all(L.order[:, u]))

    oc = 0.0
    for i, g in enumerate(gens):
        c = gens[L.complement[i]]
        oc = max(oc, float(np.max(np.abs(gens[L.complement[L.complement[i]]] - g))),
                 float(np.max(np.abs(lat.join(g, c) - one))),
                 float(np.max(np.abs(lat.meet(g, c) - zero))))
    for i, j in zip(*np.nonzero(L.order)):
        if not L.order[L.complement[j], L.complement[i]]:
            oc = max(oc, 1.0)

    om, pairs = 0.0, 0
    for i, j in zip(*np.nonzero(L.order)):
        p, q = gens[i], gens[j]
        rebuilt = lat.join(p, lat.meet(orthocomplement(p), q))
        om = max(om, float(np.max(np.abs(rebuilt - q))))
        pairs += 1

    failures = []
    nonzero = [k for k in range(L.size) if k != z]
    for fam in cliques(L.orth & ~np.eye(L.size, dtype=bool), nonzero, min(max_family, n)):
        total = gens[fam[0]]
        for k in fam[1:]:
            total = lat.join(total, gens[k])
        idx = L.index(total)
        if idx < 0:
            failures.append(tuple(L.labels[k] for k in fam))
            continue
        ubs = [k for k in range(L.size) if all(L.order[f, k] for f in fam)]
        if not all(L.order[idx, k] for k in ubs):
            failures.append(tuple(L.labels[k] for k in fam))

    eps = tol().lattice
    witnesses = []
    for i, j, k in itertools.product(range(L.size), repeat=3):
        p, q, r = gens[i], gens[j], gens[k]
        lhs = lat.meet(p, lat.join(q, r))
        rhs = lat.join(lat.meet(p, q), lat.meet(p, r))
        lhs2 = lat.join(p, lat.meet(q, r))
        rhs2 = lat.meet(lat.join(p, q), lat.join(p, r))
        if np.max(np.abs(lhs - rhs)) > eps or np.max(np.abs(lhs2 - rhs2)) > eps:
            witnesses.append((L.labels[i], L.labels[j], L.labels[k]))
            if len(witnesses) >= max_witnesses:
                break
    return LogicReport(L.size, bounded, oc, om, pairs, not failures, failures,
                       not witnesses, witnesses, eps)


# -------------------------------------------------------------------- states

def density_state(rho) -> Callable:
    """``sigma(P) = tr(rho T_P)``."""
    rho = np.asarray(rho, dtype=complex)
    return lambda event: float(np.trace(rho @ _gen(event)).real)


def point_state(p) -> Callable:
    """Dirac-like state ``sigma_p(P) = mu_P(p)``."""
    return lambda event: float(expectation(_gen(event), p))


@dataclass
class GPMReport:
    normalization_error: float
    additivity_error: float
    range_ok: bool
    families_checked: int
    witness: tuple | None
    tolerance: float

    @property
    def passed(self) -> bool:
        return (self.range_ok and self.normalization_error <= self.tolerance
                and self.additivity_error <= self.tolerance)


def check_gpm(state: Callable, L: QuantumLogicStructure, max_family: int = 6) -> GPMReport:
    """Normalization and additivity on orthogonal subfamilies of ``L``."""
    values = np.array([state(e) for e in L.elements])
    eps = tol().gpm
    range_ok = bool(np.all(values >= -eps) and np.all(values <= 1 + eps))
    norm_err = abs(values[L.one] - 1.0)
    lat = _Lattice()
    worst, witness, count = 0.0, None, 0
    nonzero = [k for k in range(L.size) if k != L.zero]
    for fam in cliques(L.orth & ~np.eye(L.size, dtype=bool), nonzero, min(max_family, L.dim)):
        total = L.generators[fam[0]]
        for k in fam[1:]:
            total = lat.join(total, L.generators[k])
        err = abs(state(FuzzyEvent(total, projector=True)) - values[list(fam)].sum())
        count += 1
        if err > worst:
            worst, witness = err, tuple(L.labels[k] for k in fam)
    return GPMReport(float(norm_err), float(worst), range_ok, count, witness, eps)


@dataclass
class OrderingReport:
    n_states: int
    missing_witnesses: list
    order_violations: list

    @property
    def passed(self) -> bool:
        return not self.missing_witnesses and not self.order_violations


def default_point_states(L: QuantumLogicStructure) -> list[Callable]:
    return [point_state(p) for p in L.probes]


def ordering_set_check(states: Sequence[Callable] | None, L: QuantumLogicStructure) -> OrderingReport:
    """Check that the states separate exactly the non-ordered pairs of ``L``."""
    states = default_point_states(L) if states is None else list(states)
    s = np.array([[st(e) for e in L.elements] for st in states])
    eps = tol().gpm
    missing, violations = [], []
    for i, j in itertools.product(range(L.size), repeat=2):
        if L.order[i, j]:
            if np.any(s[:, i] > s[:, j] + eps):
                violations.append((L.labels[i], L.labels[j]))
        elif not np.any(s[:, i] > s[:, j] + eps):
            missing.append((L.labels[i], L.labels[j]))
    return OrderingReport(len(states), missing, violations)
