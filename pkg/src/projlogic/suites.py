"""Verification suites run by ``projlogic verify``.

Each suite is a function ``(config, rng) -> list[CheckRecord]``. Suites draw
randomness only from the generator they are handed; that generator is
derived from the run seed and the suite's fixed position in
:data:`SUITE_NAMES`, so results do not depend on scheduling.
"""

from __future__ import annotations

import contextvars
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import corpora, dynamics as dyn, kahler as kg, measure as ms, operators as ops
from .config import tol, use_tolerances
from .errors import ProjLogicError
from .families import diagonal_family, spin_family
from .fuzzy import (
    LUKASIEWICZ, PRODUCT, MembershipFunction, TNorm, complement, fuzzy_leq,
    lukasiewicz_union, tconorm_apply, tnorm_apply, tnorm_axiom_check,
)
from .io import load_family, load_matrix
from .star import (
    FuzzyEvent, build_logic, check_gpm, check_quantum_logic_axioms, density_state,
    is_compatible, is_idempotent, is_orthogonal, join_meet_membership, order_iso_h,
    ordering_set_check, probe_points, star, star_values,
)
from .theorems import (
    indicator_family, operator_family_values, theorem_main_harness, theorem_mik_check,
)

SUITE_NAMES = ("geometry", "measure", "star", "logic", "tnorm", "dynamics", "mik", "main-theorem")

# Topic tags for CheckRecord.paper_ref
REFS = frozenset({
    "plumbing", "symplectic form", "Fubini-Study metric", "complex structure",
    "Hamiltonian vector field", "Poisson bracket", "observable characterization",
    "invariant measure", "Liouville densities", "reproducing property", "frame functions",
    "fuzzy set operations", "t-norm axioms", "star product identity", "star quantum logic",
    "projector lattice", "generalized probability measure", "functional quantum logic",
    "deformed t-norm logic", "Schrodinger-Hamilton equivalence", "Liouville transport",
})


@dataclass
class SuiteConfig:
    dim: int = 3
    n_samples: int = 20_000
    seed: int = 0
    tol_overrides: dict[str, float] = field(default_factory=dict)
    suites: list[str] = field(default_factory=lambda: ["all"])
    family: str | None = None
    operators: list[str] = field(default_factory=list)
    workers: int = 1

    def validate(self) -> "SuiteConfig":
        if not 2 <= self.dim <= 8:
            raise ValueError("dim must lie in [2, 8]")
        if self.n_samples < 100:
            raise ValueError("n_samples must be at least 100")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for s in self.suites:
            if s != "all" and s not in SUITE_NAMES:
                raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITE_NAMES)}, all")
        return self

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("workers")     # scheduling must not show up in reports
        return d


@dataclass
class CheckRecord:
    name: str
    paper_ref: str
    n_trials: int
    max_error: float
    tolerance: float
    passed: bool
    details: str = ""


def record(name, ref, n_trials, max_error, tolerance, details="", passed=None) -> CheckRecord:
    """Build a record; ``passed`` defaults to ``max_error <= tolerance``."""
    assert ref in REFS, ref
    max_error = float(max_error)
    if passed is None:
        passed = max_error <= tolerance
    return CheckRecord(name, ref, int(n_trials), max_error, float(tolerance), bool(passed), details)


def witness_record(name, ref, n_trials, failures, details="") -> CheckRecord:
    """Counterexample-style check: passes when ``failures`` is empty."""
    text = details if not failures else f"{details}; witnesses: {failures[:5]}".lstrip("; ")
    return record(name, ref, n_trials, len(failures), 0.0, text)


# ------------------------------------------------------------------ geometry

def suite_geometry(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    n, t = cfg.dim, tol()
    trials = 1000
    gauge = jj = kahler = iso = anti = sym = ham = pb = 0.0
    neg_metric = 0
    for _ in range(trials):
        p = ops.haar_random_point(n, rng)
        u, v, y = (kg.random_tangent(p, rng) for _ in range(3))
        shift = rng.standard_normal() * p + rng.standard_normal() * np.eye(n)
        v2 = kg.tangent_from_generator(p, v.generator + shift)
        gauge = max(gauge, abs(kg.symplectic_form(u, v) - kg.symplectic_form(u, v2)),
                    abs(kg.fubini_study_metric(u, v) - kg.fubini_study_metric(u, v2)))
        jv = kg.complex_structure(v)
        jj = max(jj, float(np.max(np.abs(kg.complex_structure(jv).value + v.value))))
        kahler = max(kahler, kg.kahler_defect(u, v))
        iso = max(iso, abs(kg.fubini_study_metric(kg.complex_structure(u), jv) - kg.fubini_study_metric(u, v)))
        anti = max(anti, abs(kg.symplectic_form(u, v) + kg.symplectic_form(v, u)))
        sym = max(sym, abs(kg.fubini_study_metric(u, v) - kg.fubini_study_metric(v, u)))
        neg_metric += kg.fubini_study_metric(u, u) < -t.kahler
        a = ops.random_hermitian(n, 1.0, rng)
        x = kg.tangent_from_generator(p, a)
        ham = max(ham, abs(kg.symplectic_form(x, y) - kg.directional_derivative(a, y)))
        b = ops.random_hermitian(n, 1.0, rng)
        z = -1j * np.trace(ops.commutator(a, b) @ p)
        pb = max(pb, abs(z.real - kg.symplectic_form(x, kg.tangent_from_generator(p, b))))
    out = [
        record("gauge_invariance_omega_g", "symplectic form", trials, gauge, t.gauge),
        record("complex_structure_squared", "complex structure", trials, jj, t.complex_structure),
        record("kahler_compatibility", "complex structure", trials, kahler, t.kahler,
               "convention g(u, v) = omega(u, j v)"),
        record("complex_structure_isometry", "complex structure", trials, iso, t.complex_structure),
        record("omega_antisymmetry", "symplectic form", trials, anti, t.lattice),
        record("metric_symmetry", "Fubini-Study metric", trials, sym, t.lattice),
        record("metric_positive", "Fubini-Study metric", trials, neg_metric, 0),
        record("hamiltonian_field_identity", "Hamiltonian vector field", trials, ham, t.hamiltonian),
        record("poisson_closed_vs_geometric", "Poisson bracket", trials, pb, t.poisson),
    ]

    fd_err = leib = 0.0
    for _ in range(10):
        p = ops.haar_random_point(n, rng)
        a, b, c = (ops.random_hermitian(n, 1.0, rng) for _ in range(3))
        v = kg.random_tangent(p, rng)
        fd_err = max(fd_err, abs(kg.directional_derivative_fd(kg.Observable(a), v) - kg.directional_derivative(a, v)))
        gh = lambda q: ops.expectation(b, q) * ops.expectation(c, q)
        lhs = kg.poisson_bracket_fd(a, gh, p)
        rhs = (ops.expectation(b, p) * kg.poisson_bracket(a, c, p)
               + ops.expectation(c, p) * kg.poisson_bracket(a, b, p))
        leib = max(leib, abs(lhs - rhs))
    out.append(record("directional_derivative_fd", "Hamiltonian vector field", 10, fd_err, t.fd))
    out.append(record("poisson_leibniz_fd", "Poisson bracket", 10, leib, t.fd))

    # in C^2 constant frame sums do not force affinity, so only the forward
    # direction is asserted there
    disagreements, fit_wrong, frame_wrong = [], 0, 0
    for name, f, affine in corpora.field_corpus(n, rng):
        by_fit = kg.observable_fit(f, n, None, rng)[1] < t.observable
        by_frame = kg.frame_function_deviation(f, n, 8, rng) < t.frame
        fit_wrong += by_fit != affine
        frame_wrong += (by_frame != affine) if n >= 3 else (affine and not by_frame)
        if by_fit != by_frame:
            disagreements.append(name)
    out.append(record("observable_fit_classifier", "observable characterization", 20, fit_wrong, 0))
    out.append(record("frame_function_classifier", "frame functions", 20, frame_wrong, 0,
                      "both directions" if n >= 3 else "affine implies constant frame sum only"))
    if n >= 3:
        out.append(witness_record("fit_vs_frame_agreement", "observable characterization", 20, disagreements))
    else:
        cubic = lambda q: 0.5 + 0.5 * ops.expectation(ops.PAULI_Z, q) ** 3
        spread = kg.frame_function_deviation(cubic, 2, 16, rng)
        _, res = kg.observable_fit(cubic, 2, None, rng)
        out.append(record("n2_frame_function_not_observable", "frame functions", 16, spread, t.frame,
                          f"constant frame sum but fit residual {res:.3g}", passed=spread <= t.frame and res > 0.01))

    for k, a in enumerate(extra_ops):
        if a.shape[0] != n:
            continue
        _, res = kg.observable_fit(kg.Observable(a), n, None, rng)
        out.append(record(f"operator{k}_observable_fit", "observable characterization", 1, res, t.observable))
        try:
            kg.hamiltonian_vector_field(a, ops.haar_random_point(n, rng), rng)
            ok = True
        except ProjLogicError:
            ok = False
        out.append(record(f"operator{k}_hamiltonian_certified", "Hamiltonian vector field", 20,
                          0.0 if ok else 1.0, 0.0))
    return out


# ------------------------------------------------------------------- measure

def _worst_z(estimates_and_targets) -> float:
    return max(e.z_score(target) for e, target in estimates_and_targets)


def suite_measure(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    n, t, N = cfg.dim, tol(), cfg.n_samples
    out = []

    pts = ops.haar_random_points(n, N, rng)
    mean_p = pts.mean(axis=0)
    sem = pts.std(axis=0, ddof=1) / np.sqrt(N)
    z = np.max(np.abs(mean_p - np.eye(n) / n) / np.maximum(sem, 1e-300))
    out.append(record("haar_mean_point", "invariant measure", N, z, t.mc_sigma,
                      "max entrywise z-score of mean(p) against I/n"))

    pairs1, pairs2 = [], []
    for k in range(50):
        a, b = ops.random_hermitian(n, 1.0, rng), ops.random_hermitian(n, 1.0, rng)
        if k < len(extra_ops) and extra_ops[k].shape[0] == n:
            a = extra_ops[k]
        pairs1.append((ms.mc_integrate(kg.Observable(a), n, N, rng), ms.moment1_exact(a)))
        field = lambda p, a=a, b=b: ops.expectation(a, p) * ops.expectation(b, p)
        pairs2.append((ms.mc_integrate(field, n, N, rng), ms.moment2_exact(a, b)))
    out.append(record("moment1_oracle_vs_mc", "invariant measure", 50, _worst_z(pairs1), t.mc_sigma,
                      "max z-score over 50 operators"))
    out.append(record("moment2_oracle_vs_mc", "invariant measure", 50, _worst_z(pairs2), t.mc_sigma,
                      "max z-score over 50 operator pairs"))

    u = ops.haar_unitary(n, rng)
    a = ops.random_hermitian(n, 1.0, rng)
    f = lambda p: ops.expectation(a, p) ** 2
    e1 = ms.mc_integrate(f, n, N, rng)
    e2 = ms.mc_integrate(lambda p: f(ops.dagger(u) @ p @ u), n, N, rng)
    joint = np.hypot(e1.std_error, e2.std_error)
    out.append(record("unitary_invariance", "invariant measure", N, abs(e1.mean - e2.mean) / joint,
                      t.mc_sigma, "joint z-score"))

    id_err, neg = 0.0, 0
    for _ in range(10):
        sigma = ops.random_density(n, rng)
        rho = ms.liouville_density(sigma, rng=rng)
        id_err = max(id_err, *ms.liouville_defects(rho, rng))
    pure = ms.liouville_density(ops.haar_random_point(n, rng), rng=rng)
    neg = float(np.min(pure(ops.haar_random_points(n, 1000, rng))))
    out.append(record("liouville_identities_oracle", "Liouville densities", 10, id_err, t.oracle))
    out.append(record("liouville_pure_goes_negative", "Liouville densities", 1000, 0.0 if neg < 0 else 1.0,
                      0.0, f"min value {neg:.6g}"))
    est = ms.mc_integrate(ms.liouville_density(ops.random_density(n, rng)), n, N, rng)
    out.append(record("liouville_normalization_mc", "Liouville densities", N, est.z_score(1.0), t.mc_sigma))
    unit_offset = ms.liouville_density(ops.random_density(n, rng), variant="unit_offset", certify=False)
    out.append(record("liouville_unit_offset_constant_defect", "Liouville densities", 1,
                      abs(unit_offset.integral() - 1.0 - (n - 1)), t.oracle,
                      f"offset-1 variant integrates to {unit_offset.integral():.17g}, not 1"))

    dev_norm = dev_verb = 0.0
    for _ in range(20):
        basis = ops.haar_random_basis(n, rng)
        q = ops.haar_random_points(n, 50, rng)
        dev_norm = max(dev_norm, float(np.max(np.abs(ms.liouville_basis_sum(basis, q) - n))))
        dev_verb = max(dev_verb, float(np.max(np.abs(ms.liouville_basis_sum(basis, q, "unit_offset") - n * n))))
    out.append(record("liouville_basis_sum_normalized", "reproducing property", 1000, dev_norm, t.reproducing,
                      "sum over a basis equals n with offset n"))
    out.append(record("liouville_basis_sum_unit_offset", "reproducing property", 1000, dev_verb, t.reproducing,
                      "sum over a basis equals n^2 with offset 1"))

    rep = 0.0
    for _ in range(20):
        mu = MembershipFunction.from_operator(ops.random_projector(n, int(rng.integers(1, n + 1)), rng))
        rep = max(rep, ms.dirac_reproducing_check(mu, ops.haar_random_point(n, rng), N, rng).defect)
    out.append(record("reproducing_observable", "reproducing property", 20, rep, t.reproducing))
    p0 = ops.point_from_vector(ops.basis_vector(n, 0))
    weakest, detail = np.inf, []
    for name, f in corpora.nonobservable_corpus(n):
        r = ms.dirac_reproducing_check(MembershipFunction.pointwise(f, n), p0, N, rng)
        weakest = min(weakest, r.defect)
        detail.append(f"{name}={r.defect:.4f}+-{r.std_error:.4f}")
    out.append(record("reproducing_fails_nonobservable", "reproducing property", len(detail), weakest, 0.05,
                      "; ".join(detail), passed=weakest > 0.05))

    frame = 0.0
    for _ in range(10):
        frame = max(frame, kg.frame_function_deviation(kg.Observable(ops.random_hermitian(n, 1.0, rng)), n, 8, rng))
    out.append(record("frame_sum_observable", "frame functions", 80, frame, t.reproducing))

    sigma = ops.random_density(n, rng)
    mu = MembershipFunction.from_operator(ops.random_projector(n, 1, rng))
    fast = ms.fuzzy_event_probability(mu, ms.liouville_density(sigma), n, N, rng).mean
    slow = ms.mc_integrate(lambda p: mu(p) * ms.liouville_density(sigma)(p), n, N, rng)
    out.append(record("fuzzy_event_probability_exact", "Liouville densities", 1,
                      abs(fast - float(np.trace(sigma @ mu.operator).real)), t.oracle))
    out.append(record("fuzzy_event_probability_mc", "Liouville densities", N, slow.z_score(fast), t.mc_sigma))
    return out


# ---------------------------------------------------------------------- star

def suite_star(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    n, t = cfg.dim, tol()
    out = []
    dev = conj = 0.0
    trials = 1000
    gens = [ops.random_hermitian(n, 1.0, rng) for _ in range(2 * trials)]
    pts = ops.haar_random_points(n, trials, rng)
    for k in range(trials):
        t1, t2, p = gens[2 * k], gens[2 * k + 1], pts[k]
        closed = star_values(t1, t2, p)
        dev = max(dev, abs(closed - star(t1, t2).geometric(p)))
        conj = max(conj, abs(closed - np.conj(star_values(t2, t1, p))))
    out.append(record("star_closed_vs_geometric", "star product identity", trials, dev, t.star))
    out.append(record("star_conjugation_symmetry", "star product identity", trials, conj, t.star))

    corpus = [ops.random_projector(n, int(rng.integers(1, n + 1)), rng) for _ in range(100)]
    corpus += [corpora.perturbed_projector(n, rng) for _ in range(100)]
    wrong = sum(is_idempotent(m) != ops.is_projector(m) for m in corpus)
    out.append(record("idempotent_iff_projector", "star quantum logic", len(corpus), wrong, 0))

    pairs = corpora.projector_pair_corpus(n, rng, 200)
    probes = None
    bad_c = bad_o = 0
    jm = 0.0
    n_compat = 0
    for a, b in pairs:
        probes = probe_points([a, b], rng)
        c = is_compatible(a, b, probes)
        bad_c += c != (np.max(np.abs(ops.commutator(a, b))) < t.commute)
        bad_o += is_orthogonal(a, b, probes) != (np.max(np.abs(a @ b)) < t.commute)
        if c:
            n_compat += 1
            jn, mt = join_meet_membership(a, b, probes)
            jm = max(jm, float(np.max(np.abs(jn.generator - ops.lattice_join(a, b)))),
                     float(np.max(np.abs(mt.generator - ops.lattice_meet(a, b)))))
    out.append(record("compatible_iff_commuting", "star quantum logic", len(pairs), bad_c, 0))
    out.append(record("orthogonal_iff_zero_product", "star quantum logic", len(pairs), bad_o, 0))
    out.append(record("star_join_meet_vs_lattice", "star quantum logic", n_compat, jm, t.lattice))

    mismatch = 0
    for k in range(trials):
        if k % 2:
            p, q = corpora.ordered_projector_pair(n, rng)
        else:
            p = ops.random_projector(n, int(rng.integers(1, n + 1)), rng)
            q = ops.random_projector(n, int(rng.integers(1, n + 1)), rng)
        hp, hq = order_iso_h(p), order_iso_h(q)
        mismatch += ops.projector_leq(p, q) != fuzzy_leq(hp.membership, hq.membership)
        mismatch += not np.array_equal(hp.generator, p)
    out.append(record("order_isomorphism", "star quantum logic", trials, mismatch, 0))

    for k, (a, b) in enumerate(itertools.combinations(extra_ops, 2)):
        if a.shape[0] != n:
            continue
        out.append(record(f"operators{k}_star_closed_vs_geometric", "star product identity", 64,
                          star(a, b).deviation(ops.haar_random_points(n, 64, rng)), t.star))
    return out


# --------------------------------------------------------------------- logic

def _family_events(cfg: SuiteConfig):
    if cfg.family is None:
        return None
    elems = load_family(cfg.family)
    return [FuzzyEvent.from_operator(e.matrix, e.label) for e in elems if e.role == "projector"], \
        [e.label for e in elems if e.role != "projector"]


def _logic_records(tag: str, family, rng, out: list) -> None:
    t = tol()
    L = build_logic(family, rng=rng)
    rep = check_quantum_logic_axioms(L)
    out.append(record(f"{tag}_orthomodular", "star quantum logic", rep.orthomodular_pairs,
                      rep.orthomodular_error, t.lattice))
    out.append(record(f"{tag}_orthocomplementation", "star quantum logic", L.size, rep.orthocomplement_error,
                      t.lattice, passed=rep.bounded and rep.orthocomplement_error <= t.lattice))
    out.append(witness_record(f"{tag}_sigma_orthocomplete", "star quantum logic", L.size, rep.sigma_failures))
    all_compat = bool(np.all(L.compat))
    text = ("distributive" if rep.distributive else
            f"{len(rep.distributivity_witnesses)} witness triples, first {rep.distributivity_witnesses[:6]}")
    out.append(record(f"{tag}_distributive_iff_all_compatible", "star quantum logic", L.size ** 3,
                      float(rep.distributive != all_compat), 0.0,
                      f"all pairs compatible: {all_compat}; {text}"))
    g = check_gpm(density_state(ops.random_density(L.dim, rng)), L)
    out.append(record(f"{tag}_density_state_gpm", "generalized probability measure", g.families_checked,
                      max(g.normalization_error, g.additivity_error), t.gpm, passed=g.passed))
    g1 = check_gpm(lambda e: 1.0, L)
    out.append(record(f"{tag}_constant_state_rejected", "generalized probability measure",
                      g1.families_checked, 0.0 if not g1.passed else 1.0, 0.0,
                      f"additivity error of sigma = 1: {g1.additivity_error:.3g}"))
    o = ordering_set_check(None, L)
    out.append(witness_record(f"{tag}_point_states_ordering_set", "generalized probability measure",
                              o.n_states, o.missing_witnesses + o.order_violations))
    off = [(i, j) for i, j in zip(*np.nonzero(L.compat)) if i < j and not L.star_path[i, j]]
    out.append(witness_record(f"{tag}_star_path_on_compatible", "star quantum logic", int(L.compat.sum()), off))


def suite_logic(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    n, t = cfg.dim, tol()
    out: list[CheckRecord] = []
    loaded = _family_events(cfg)
    if loaded is not None:
        fam, skipped = loaded
        _logic_records("family", fam, rng, out)
        if skipped:
            out[-1].details = f"non-projector elements skipped: {skipped}"
    _logic_records("spin2", spin_family(), rng, out)
    _logic_records(f"diagonal{min(n, 3)}", diagonal_family(min(n, 3)), rng, out)

    dm = om = 0.0
    bad = []
    trials = 200
    for k in range(trials):
        p = ops.random_projector(n, int(rng.integers(1, n + 1)), rng)
        q = (corpora.commuting_projector_pair(n, rng)[0] if k % 2
             else ops.random_projector(n, int(rng.integers(1, n + 1)), rng))
        lhs = ops.orthocomplement(ops.lattice_join(p, q))
        rhs = ops.lattice_meet(ops.orthocomplement(p), ops.orthocomplement(q))
        dm = max(dm, float(np.max(np.abs(lhs - rhs))))
        p2 = ops.lattice_meet(p, q)           # forces p2 <= q
        rebuilt = ops.lattice_join(p2, ops.lattice_meet(ops.orthocomplement(p2), q))
        om = max(om, float(np.max(np.abs(rebuilt - q))))
        dec = ops.compatibility_decomposition(p, q)
        commuting = np.max(np.abs(ops.commutator(p, q))) <= t.commute
        if (dec is not None) != commuting:
            bad.append(k)
    out.append(record("de_morgan_random", "projector lattice", trials, dm, t.lattice))
    out.append(record("orthomodular_random", "projector lattice", trials, om, t.lattice))
    out.append(witness_record("compatibility_decomposition", "projector lattice", trials, bad))
    return out


# --------------------------------------------------------------------- tnorm

def suite_tnorm(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    t, n = tol(), cfg.dim
    out = []
    for tn in (LUKASIEWICZ, PRODUCT):
        r = tnorm_axiom_check(tn, 101, 10_000, rng)
        for axiom, v in r.violations.items():
            out.append(record(f"{tn.name}_{axiom}", "t-norm axioms", 101 ** 2 + 10_000, v, t.tnorm))
    bad = TNorm("min_squared", lambda x, y: np.minimum(x, y) ** 2)
    r = tnorm_axiom_check(bad, 101, 10_000, rng)
    wx = r.witnesses.get("unit", (np.nan,))[0]
    out.append(record("counterexample_unit_violation", "t-norm axioms", 101, abs(r.violations["unit"] - 0.25),
                      t.tnorm, f"violation {r.violations['unit']:.17g} at x = {wx}",
                      passed=abs(r.violations["unit"] - 0.25) <= t.tnorm and wx == 0.5))

    pts = ops.haar_random_points(n, 500, rng)
    a = MembershipFunction.from_operator(ops.random_projector(n, 1, rng))
    b = MembershipFunction.from_operator(0.5 * ops.random_projector(n, 1, rng) + 0.25 * np.eye(n))
    dual = 0.0
    for tn in (LUKASIEWICZ, PRODUCT):
        lhs = tconorm_apply(tn, a, b)(pts)
        rhs = complement(tnorm_apply(tn, complement(a), complement(b)))(pts)
        dual = max(dual, float(np.max(np.abs(lhs - rhs))))
    out.append(record("conorm_de_morgan_duality", "fuzzy set operations", 1000, dual, t.tnorm))
    luk = float(np.max(np.abs(tconorm_apply(LUKASIEWICZ, a, b)(pts) - lukasiewicz_union(a, b)(pts))))
    out.append(record("lukasiewicz_union_derived", "fuzzy set operations", 500, luk, t.tnorm))
    prod = float(np.max(np.abs(tnorm_apply(PRODUCT, a, b)(pts) - a(pts) * b(pts))))
    out.append(record("product_intersection_pointwise", "fuzzy set operations", 500, prod, t.tnorm))
    g = np.linspace(0, 1, 101)
    zero = max(float(np.max(np.abs(tn(g, np.zeros_like(g))))) for tn in (LUKASIEWICZ, PRODUCT))
    out.append(record("boundary_t_x_0", "t-norm axioms", 202, zero, t.tnorm))
    return out


# ------------------------------------------------------------------ dynamics

def suite_dynamics(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    t, n = tol(), cfg.dim
    out = []
    h = ops.PAULI_Z
    p0 = ops.projector_onto([1, 1])
    grid = np.linspace(0, 2 * np.pi, 33)
    exact = dyn.schrodinger_flow(h, p0, grid)
    fine = dyn.hamilton_flow(h, p0, grid, 1e-3)
    out.append(record("flow_equivalence_sigma_z", "Schrodinger-Hamilton equivalence", grid.size,
                      dyn.max_flow_deviation(fine, exact), t.flow, "dt = 1e-3 on [0, 2 pi]"))
    d1 = dyn.max_flow_deviation(dyn.hamilton_flow(h, p0, grid, 1e-2), exact)
    d2 = dyn.max_flow_deviation(dyn.hamilton_flow(h, p0, grid, 5e-3), exact)
    ratio = d1 / d2
    out.append(record("rk4_order_four", "Schrodinger-Hamilton equivalence", 2, ratio, 32.0,
                      f"defects {d1:.3e} / {d2:.3e}", passed=8.0 <= ratio <= 32.0))
    energy = float(np.max(np.abs(ops.expectation(h, fine.trajectory) - ops.expectation(h, p0))))
    out.append(record("energy_conservation", "Schrodinger-Hamilton equivalence", grid.size, energy, t.lattice))
    purity = float(np.max(np.abs(np.einsum("kij,kji->k", fine.trajectory, fine.trajectory).real - 1)))
    out.append(record("purity_preserved", "Schrodinger-Hamilton equivalence", grid.size, purity, t.flow))

    hn = ops.random_hermitian(n, 1.0, rng)
    pn = ops.haar_random_point(n, rng)
    grid_n = np.linspace(0, 1.0, 11)
    dt = 1e-2 / np.linalg.norm(hn, 2) / 4
    flow = dyn.hamilton_flow(hn, pn, grid_n, dt)
    ex = dyn.schrodinger_flow(hn, pn, grid_n)
    a = ops.random_hermitian(n, 1.0, rng)
    transport = float(np.max(np.abs(ops.expectation(a, flow.trajectory) - ops.expectation(a, ex.trajectory))))
    out.append(record("expectation_transport", "Schrodinger-Hamilton equivalence", grid_n.size, transport, 1e-7))
    step = 1e-4
    heis = 0.0
    for tk in grid_n[1:-1]:
        up = dyn.schrodinger_flow(hn, pn, [tk - step, tk, tk + step]).trajectory
        deriv = (ops.expectation(a, up[2]) - ops.expectation(a, up[0])) / (2 * step)
        heis = max(heis, abs(deriv - kg.poisson_bracket(a, hn, up[1])))
    out.append(record("heisenberg_poisson_form", "Poisson bracket", grid_n.size - 2, heis, 1e-5))

    probes = ops.haar_random_points(n, 64, rng)
    lt = max(dyn.liouville_transport_check(ops.random_density(n, rng), hn, 1.0, probes),
             dyn.liouville_transport_check(ops.random_density(2, rng), h, 1.0, ops.haar_random_points(2, 64, rng)),
             dyn.liouville_transport_check(np.eye(n) / n, hn, 1.0, probes))
    out.append(record("liouville_transport", "Liouville transport", 3 * 64, lt, t.transport))
    return out


# ----------------------------------------------------------------------- mik

def suite_mik(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    out = []
    vals, names = indicator_family(3)
    r = theorem_mik_check(vals, names)
    out.append(record("indicator_family_boolean", "functional quantum logic", r.size, 0.0 if r.passed and r.boolean else 1.0,
                      0.0, f"boolean={r.boolean}"))
    gens = [e.generator for e in spin_family()] + [np.zeros((2, 2)), np.eye(2)]
    v, _ = operator_family_values(gens, rng)
    r = theorem_mik_check(v, ["e1", "e2", "+", "-", "0", "I"])
    out.append(record("spin_family_functional_logic", "functional quantum logic", r.size, 0.0 if r.passed else 1.0,
                      0.0, f"boolean={r.boolean}"))
    r = theorem_mik_check(vals[:-1], names[:-1])
    hyp = r.hypotheses["complement_closed"]
    out.append(record("missing_complement_detected", "functional quantum logic", 1,
                      0.0 if not hyp.passed and not r.conclusions else 1.0, 0.0, f"witness {hyp.witness}"))
    return out


# -------------------------------------------------------------- main theorem

def suite_main(cfg: SuiteConfig, rng: np.random.Generator, extra_ops=()) -> list[CheckRecord]:
    out = []
    k = min(cfg.dim, 4)
    r = theorem_main_harness(diagonal_family(k), "operator", rng)
    whole = len(r.boolean_sublattices) == 1 and len(r.boolean_sublattices[0]) == len(r.idempotent_labels)
    out.append(record(f"diagonal{k}_hypotheses_and_conclusions", "deformed t-norm logic",
                      len(r.idempotent_labels), 0.0 if r.passed and whole else 1.0, 0.0,
                      _summary(r)))
    r = theorem_main_harness(spin_family(), "operator", rng)
    same = r.boolean_sublattices == r.commuting_subfamilies
    out.append(record("spin2_hypotheses_and_conclusions", "deformed t-norm logic", len(r.idempotent_labels),
                      0.0 if r.passed and same else 1.0, 0.0,
                      f"{_summary(r)}; sublattices {r.boolean_sublattices}"))
    r = theorem_main_harness(spin_family(), "pointwise", rng)
    out.append(record("pointwise_star_degenerate", "deformed t-norm logic", 6,
                      0.0 if r.degenerate and r.passed else 1.0, 0.0,
                      f"idempotents {r.idempotent_labels}"))
    return out


def _summary(r) -> str:
    bad = [k for k, c in {**r.hypotheses, **r.conclusions}.items() if not c.passed]
    return "all hypotheses and conclusions hold" if not bad else f"failed: {bad}"


SUITES = {
    "geometry": suite_geometry, "measure": suite_measure, "star": suite_star, "logic": suite_logic,
    "tnorm": suite_tnorm, "dynamics": suite_dynamics, "mik": suite_mik, "main-theorem": suite_main,
}


def suite_rng(seed: int, name: str) -> np.random.Generator:
    """Generator for one suite, independent of execution order."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(SUITE_NAMES.index(name),)))


def expand(names) -> list[str]:
    out = []
    for s in names:
        for name in (SUITE_NAMES if s == "all" else (s,)):
            if name not in SUITES:
                raise ValueError(f"unknown suite {name!r}")
            if name not in out:
                out.append(name)
    return out


def run_suite(cfg: SuiteConfig) -> list[CheckRecord]:
    """Run the configured suites; records come back in suite order."""
    cfg.validate()
    names = expand(cfg.suites)
    extra = [load_matrix(f) for f in cfg.operators]
    if cfg.family is not None:
        load_family(cfg.family)     # surface ingestion errors before any work

    def one(name):
        with use_tolerances(**cfg.tol_overrides):
            return SUITES[name](cfg, suite_rng(cfg.seed, name), extra)

    if cfg.workers <= 1:
        results = [one(name) for name in names]
    else:
        with ThreadPoolExecutor(cfg.workers) as pool:
            futures = [pool.submit(contextvars.copy_context().run, one, name) for name in names]
            results = [f.result() for f in futures]
    return [r for rs in results for r in rs]
