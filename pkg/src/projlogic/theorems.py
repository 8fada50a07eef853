"""Verification harnesses for quantum logics of [0, 1]-valued functions.

:func:`theorem_mik_check` treats a finite family of functions on a finite
universe as a poset under pointwise order and checks that the closure
hypotheses imply an orthomodular, sigma-orthocomplete poset with the point
evaluations as an ordering set of states.

:func:`theorem_main_harness` does the same for a family of fuzzy events with
union and intersection deformed by a star product, and looks for the
Boolean sublattices on which the deformed operations are the lattice ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import networkx as nx
import numpy as np

from .config import tol
from .fuzzy import fuzzy_leq, MembershipFunction
from .operators import eigenvector_points, expectation, haar_random_points, is_projector
from .star import (
    FAMILY_CAP, FuzzyEvent, LogicReport, build_logic, check_quantum_logic_axioms,
    cliques, star_values,
)


@dataclass
class Check:
    passed: bool
    detail: str = ""
    witness: tuple | None = None


# ------------------------------------------------------------ functional poset

class FunctionalPoset:
    """Rows of ``values`` ordered pointwise, with ``not f = 1 - f``."""

    def __init__(self, values: np.ndarray, labels: Sequence[str] | None = None):
        self.values = np.asarray(values, dtype=float)
        self.size = self.values.shape[0]
        self.labels = list(labels) if labels is not None else [f"f{k}" for k in range(self.size)]
        eps = tol().grade
        v = self.values
        self.order = np.all(v[:, None, :] <= v[None, :, :] + eps, axis=2)

    def find(self, row) -> int:
        hit = np.flatnonzero(np.max(np.abs(self.values - row), axis=1) <= tol().grade)
        return int(hit[0]) if hit.size else -1

    def lub_of(self, idx: Sequence[int]) -> int:
        upper = np.flatnonzero(np.all(self.order[list(idx), :], axis=0))
        for k in upper:
            if np.all(self.order[k, upper]):
                return int(k)
        return -1

    def glb_of(self, idx: Sequence[int]) -> int:
        lower = np.flatnonzero(np.all(self.order[:, list(idx)], axis=1))
        for k in lower:
            if np.all(self.order[lower, k]):
                return int(k)
        return -1

    def tables(self):
        m = self.size
        join = np.full((m, m), -1)
        meet = np.full((m, m), -1)
        for i, j in itertools.combinations_with_replacement(range(m), 2):
            join[i, j] = join[j, i] = self.lub_of((i, j))
            meet[i, j] = meet[j, i] = self.glb_of((i, j))
        return meet, join


def dedupe_rows(values: np.ndarray, labels: Sequence[str]):
    keep, names = [], []
    for row, lab in zip(values, labels):
        if not any(np.max(np.abs(row - r)) <= tol().grade for r in keep):
            keep.append(row)
            names.append(lab)
    return np.array(keep), names


def boolean_algebra_check(members: Sequence[int], meet: np.ndarray, join: np.ndarray,
                          comp: np.ndarray, zero: int, one: int) -> dict[str, Check]:
    """The six-tuple Boolean algebra axioms restricted to ``members``."""
    s = list(members)
    res: dict[str, Check] = {}

    def first(pred, arity):
        for t in itertools.product(s, repeat=arity):
            if not pred(*t):
                return t
        return None

    w = first(lambda p, q: meet[p, q] in s and join[p, q] in s, 2)
    if w is not None:
        return {"closed": Check(False, witness=w)}
    w = first(lambda p, q: meet[p, q] == meet[q, p] and join[p, q] == join[q, p], 2)
    if w is None:
        w = first(lambda p, q, r: meet[meet[p, q], r] == meet[p, meet[q, r]]
                  and join[join[p, q], r] == join[p, join[q, r]], 3)
    res["commutative_associative"] = Check(w is None, witness=w)
    w = first(lambda p, q, r: join[p, meet[q, r]] == meet[join[p, q], join[p, r]]
              and meet[p, join[q, r]] == join[meet[p, q], meet[p, r]], 3)
    res["distributive"] = Check(w is None, witness=w)
    w = first(lambda p, q: join[p, meet[p, q]] == p and meet[p, join[p, q]] == p, 2)
    res["absorption"] = Check(w is None, witness=w)
    w = first(lambda p: join[p, zero] == p and meet[p, one] == p, 1)
    res["identities"] = Check(w is None, witness=w)
    w = first(lambda p: comp[p] in s and join[p, comp[p]] == one and meet[p, comp[p]] == zero, 1)
    res["complement"] = Check(w is None, witness=w)
    return res


@dataclass
class MikReport:
    size: int
    hypotheses: dict[str, Check]
    conclusions: dict[str, Check] = field(default_factory=dict)
    boolean: bool | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return all(c.passed for c in self.hypotheses.values())

    @property
    def passed(self) -> bool:
        return self.hypotheses_hold and bool(self.conclusions) and all(
            c.passed for c in self.conclusions.values())


def _orthogonal_families(poset: FunctionalPoset, orth: np.ndarray, zero: int, max_size: int):
    nonzero = [k for k in range(poset.size) if k != zero]
    yield from cliques(orth & ~np.eye(poset.size, dtype=bool), nonzero, max_size)


def theorem_mik_check(values, labels: Sequence[str] | None = None, max_family: int = 6) -> MikReport:
    """Check closure hypotheses and poset conclusions for a function family.

    ``values`` has one row per function, one column per universe point.
    """
    values = np.asarray(values, dtype=float)
    if values.shape[1] > 10_000 or values.shape[0] > FAMILY_CAP:
        raise ValueError("universe is capped at 1e4 points and families at 64")
    labels = list(labels) if labels is not None else [f"f{k}" for k in range(len(values))]
    values, labels = dedupe_rows(values, labels)
    P = FunctionalPoset(values, labels)
    eps = tol().grade
    hyp: dict[str, Check] = {}

    zero = P.find(np.zeros(values.shape[1]))
    hyp["zero_present"] = Check(zero >= 0, witness=None if zero >= 0 else ("0",))

    comp = np.array([P.find(1.0 - row) for row in values])
    miss = np.flatnonzero(comp < 0)
    hyp["complement_closed"] = Check(miss.size == 0,
                                     witness=tuple(labels[k] for k in miss[:1]) or None)

    admissible = np.all(values[:, None, :] + values[None, :, :] <= 1 + eps, axis=2)
    bad = None
    for fam in cliques(admissible & ~np.eye(P.size, dtype=bool),
                       [k for k in range(P.size) if k != zero], max_family):
        if P.find(values[list(fam)].sum(axis=0)) < 0:
            bad = tuple(labels[k] for k in fam)
            break
    hyp["orthogonal_sums_closed"] = Check(bad is None, witness=bad)

    report = MikReport(P.size, hyp)
    if not report.hypotheses_hold:
        return report

    con = report.conclusions
    o = P.order
    ok = bool(np.all(np.diag(o)) and not np.any(o & o.T & ~np.eye(P.size, dtype=bool))
              and not np.any((o.astype(int) @ o.astype(int) > 0) & ~o))
    con["partial_order"] = Check(ok)
    one = P.find(np.ones(values.shape[1]))
    con["bounded"] = Check(one >= 0 and bool(np.all(o[zero, :]) and np.all(o[:, one])))
    meet, join = P.tables()
    w = next(((labels[i],) for i in range(P.size)
              if comp[comp[i]] != i or join[i, comp[i]] != one or meet[i, comp[i]] != zero), None)
    if w is None:
        w = next(((labels[i], labels[j]) for i, j in zip(*np.nonzero(o)) if not o[comp[j], comp[i]]), None)
    con["orthocomplemented"] = Check(w is None, witness=w)

    w = None
    for i, j in zip(*np.nonzero(o)):
        m = meet[comp[i], j]
        if m < 0 or join[i, m] != j:
            w = (labels[i], labels[j])
            break
    con["orthomodular"] = Check(w is None, witness=w)

    orth = o[:, comp]          # f <= not g
    w = None
    n_fams = 0
    for fam in _orthogonal_families(P, orth, zero, max_family):
        n_fams += 1
        lub = P.lub_of(fam)
        if lub < 0 or np.max(np.abs(values[lub] - values[list(fam)].sum(axis=0))) > eps:
            w = tuple(labels[k] for k in fam)
            break
    con["sigma_orthocomplete"] = Check(w is None, f"{n_fams} orthogonal families", w)
    # point states: sigma_x(1) = 1 holds by construction; additivity is the lub = sum check
    con["point_states_gpm"] = Check(w is None and one >= 0 and bool(np.all(np.abs(values[one] - 1.0) <= eps)))
    w = next(((labels[i], labels[j]) for i, j in zip(*np.nonzero(~o))
              if not np.any(values[i] > values[j] + eps)), None)
    con["point_states_ordering"] = Check(w is None, witness=w)

    lattice = bool(np.all(meet >= 0) and np.all(join >= 0))
    report.boolean = lattice and all(
        c.passed for c in boolean_algebra_check(range(P.size), meet, join, comp, zero, one).values())
    return report


def indicator_family(n_atoms: int) -> tuple[np.ndarray, list[str]]:
    """All indicator functions of subsets of an ``n_atoms``-point universe."""
    rows, names = [], []
    for mask in range(2 ** n_atoms):
        bits = [(mask >> k) & 1 for k in range(n_atoms)]
        rows.append(np.array(bits, dtype=float))
        names.append("{" + ",".join(str(k) for k in range(n_atoms) if bits[k]) + "}")
    return np.array(rows), names


def operator_family_values(generators: Sequence, rng: np.random.Generator, n_random: int = 64):
    """Evaluate ``tr(T p)`` on Haar points plus the eigenvector points of
    every generator and every pairwise sum of generators."""
    gens = [np.asarray(g, dtype=complex) for g in generators]
    n = gens[0].shape[0]
    extra = [a + b for a, b in itertools.combinations(gens, 2)]
    pts = np.concatenate([haar_random_points(n, n_random, rng), eigenvector_points(*gens, *extra)])
    return np.array([expectation(g, pts) for g in gens]), pts


# ------------------------------------------------------- deformed t-norm logic

StarRule = Callable[[FuzzyEvent, FuzzyEvent, np.ndarray], np.ndarray]


def operator_star(a: FuzzyEvent, b: FuzzyEvent, points) -> np.ndarray:
    return star_values(a.generator, b.generator, points)


def pointwise_star(a: FuzzyEvent, b: FuzzyEvent, points) -> np.ndarray:
    """The undeformed product t-norm."""
    return (a(points) * b(points)).astype(complex)


STAR_RULES: dict[str, StarRule] = {"operator": operator_star, "pointwise": pointwise_star}


@dataclass
class MainReport:
    n_input: int
    idempotent_labels: list[str]
    dropped_labels: list[str]
    hypotheses: dict[str, Check]
    conclusions: dict[str, Check] = field(default_factory=dict)
    logic: LogicReport | MikReport | None = None
    boolean_sublattices: list[tuple[str, ...]] = field(default_factory=list)
    commuting_subfamilies: list[tuple[str, ...]] = field(default_factory=list)

    @property
    def degenerate(self) -> bool:
        return len(self.idempotent_labels) <= 2

    @property
    def hypotheses_hold(self) -> bool:
        return all(c.passed for c in self.hypotheses.values())

    @property
    def passed(self) -> bool:
        return self.hypotheses_hold and bool(self.conclusions) and all(
            c.passed for c in self.conclusions.values())


def _complement_closure(events: Sequence[FuzzyEvent]) -> list[FuzzyEvent]:
    n = events[0].dim
    out = [FuzzyEvent(np.zeros((n, n), dtype=complex), "0", True),
           FuzzyEvent(np.eye(n, dtype=complex), "I", True)]
    for k, e in enumerate(events):
        lab = e.label or f"A{k}"
        for ev in (FuzzyEvent(e.generator, lab, e.projector),
                   FuzzyEvent(np.eye(n) - e.generator, f"~{lab}", e.projector)):
            if all(np.max(np.abs(ev.generator - o.generator)) > tol().rank for o in out):
                out.append(ev)
    return out


def _maximal_cliques(adj: np.ndarray, labels) -> list[tuple[str, ...]]:
    g = nx.Graph()
    g.add_nodes_from(range(len(labels)))
    g.add_edges_from((i, j) for i, j in zip(*np.nonzero(np.triu(adj, 1))))
    return sorted(tuple(sorted(labels[k] for k in c)) for c in nx.find_cliques(g))


def theorem_main_harness(family: Sequence[FuzzyEvent], star_rule: str | StarRule = "operator",
                         rng: np.random.Generator | None = None, max_family: int = 6) -> MainReport:
    """Hypotheses and conclusions for a star-deformed union/intersection."""
    rule = STAR_RULES[star_rule] if isinstance(star_rule, str) else star_rule
    rng = np.random.default_rng(0) if rng is None else rng
    events = _complement_closure(list(family))
    if len(events) > FAMILY_CAP:
        raise ValueError(f"closed family exceeds {FAMILY_CAP} elements")
    gens = [e.generator for e in events]
    _, pts = operator_family_values(gens, rng)
    eps = tol().probe

    vals = np.array([e(pts) for e in events])
    idem = [k for k, e in enumerate(events) if np.max(np.abs(rule(e, e, pts) - vals[k])) < eps]
    F = [events[k] for k in idem]
    V = vals[idem]
    labels = [e.label for e in F]
    m = len(F)
    S = np.array([[rule(a, b, pts) for b in F] for a in F])   # (m, m, N)
    star_zero = np.max(np.abs(S), axis=2) < eps

    hyp: dict[str, Check] = {}
    zero = next((k for k in range(m) if np.max(np.abs(V[k])) < eps), -1)
    hyp["empty_present"] = Check(zero >= 0)

    def find(row):
        hit = [k for k in range(m) if np.max(np.abs(V[k] - row)) < eps]
        return hit[0] if hit else -1

    comp = np.array([find(1.0 - V[k]) for k in range(m)])
    miss = [labels[k] for k in range(m) if comp[k] < 0]
    hyp["complement_closed"] = Check(not miss, witness=tuple(miss[:1]) or None)

    sum_le_1 = np.all(V[:, None, :] + V[None, :, :] <= 1 + eps, axis=2)
    w = next(((labels[i], labels[j]) for i, j in itertools.product(range(m), repeat=2)
              if sum_le_1[i, j] != star_zero[i, j]), None)
    hyp["disjointness_iff_star_zero"] = Check(w is None, witness=w)

    w, n_fams = None, 0
    for fam in cliques(star_zero & ~np.eye(m, dtype=bool), [k for k in range(m) if k != zero], max_family):
        n_fams += 1
        if find(V[list(fam)].sum(axis=0)) < 0:
            w = tuple(labels[k] for k in fam)
            break
    hyp["orthogonal_unions_closed"] = Check(w is None, f"{n_fams} orthogonal families", w)

    report = MainReport(len(family), labels, [e.label for k, e in enumerate(events) if k not in idem], hyp)
    if not report.hypotheses_hold:
        return report
    con = report.conclusions

    if all(is_projector(e.generator) for e in F):
        L = build_logic(F, labels, rng=np.random.default_rng(0))
        logic = check_quantum_logic_axioms(L, max_family=max_family)
        con["quantum_logic"] = Check(logic.passed, f"{L.size} elements")
    else:
        logic = theorem_mik_check(V, labels, max_family)
        con["quantum_logic"] = Check(logic.passed, f"{logic.size} elements (functional path)")
    report.logic = logic

    mus = [MembershipFunction(e.dim, operator=e.generator) for e in F]
    comp_mu = [MembershipFunction(e.dim, operator=np.eye(e.dim) - e.generator) for e in F]
    perp = np.array([[fuzzy_leq(mus[i], comp_mu[j]) for j in range(m)] for i in range(m)])
    w = next(((labels[i], labels[j]) for i, j in zip(*np.nonzero(perp != star_zero))), None)
    con["orthogonality_iff_star_zero"] = Check(w is None, witness=w)

    order = np.array([[fuzzy_leq(a, b) for b in mus] for a in mus])
    poset = FunctionalPoset(V, labels)
    poset.order = order
    meet, join = poset.tables()
    u_vals = V[:, None, :] + V[None, :, :] - S
    good = np.zeros((m, m), dtype=bool)
    for i, j in itertools.product(range(m), repeat=2):
        if meet[i, j] >= 0 and join[i, j] >= 0:
            good[i, j] = (np.max(np.abs(S[i, j] - V[meet[i, j]])) < eps
                          and np.max(np.abs(u_vals[i, j] - V[join[i, j]])) < eps)
    commute = np.max(np.abs(S - S.transpose(1, 0, 2)), axis=2) < eps
    one = comp[zero]

    w = None
    sublattices = []
    g = nx.Graph()
    g.add_nodes_from(range(m))
    g.add_edges_from((i, j) for i, j in zip(*np.nonzero(np.triu(good & good.T, 1))))
    for clique in nx.find_cliques(g):
        members = sorted(clique)
        if not all(good[i, i] for i in members):
            continue
        closed = all(meet[i, j] in members and join[i, j] in members
                     for i, j in itertools.product(members, repeat=2)) \
            and all(comp[i] in members for i in members)
        if not closed:
            continue
        sublattices.append(tuple(sorted(labels[k] for k in members)))
        checks = boolean_algebra_check(members, meet, join, comp, zero, one)
        pairs_commute = all(commute[i, j] for i, j in itertools.product(members, repeat=2))
        if not (pairs_commute and all(c.passed for c in checks.values())):
            w = tuple(labels[k] for k in members)
    report.boolean_sublattices = sorted(sublattices)
    report.commuting_subfamilies = _maximal_cliques(commute, labels)
    con["boolean_sublattices_commute"] = Check(w is None, f"{len(sublattices)} sublattices", w)
    return report
