"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from projlogic import dynamics as dyn, kahler as kg, measure as ms, operators as ops
from projlogic.corpora import (
    commuting_projector_pair, nonobservable_corpus, ordered_projector_pair, perturbed_projector,
    projector_pair_corpus,
)
from projlogic.families import diagonal_family, spin_family
from projlogic.fuzzy import LUKASIEWICZ, PRODUCT, MembershipFunction, TNorm, fuzzy_leq, tnorm_axiom_check
from projlogic.io import save_family
from projlogic.star import (
    build_logic, check_quantum_logic_axioms, is_compatible, is_idempotent, is_orthogonal,
    join_meet_membership, order_iso_h, probe_points, star, star_values,
)
from projlogic.theorems import indicator_family, theorem_main_harness, theorem_mik_check

DIMS = (2, 3, 4, 5)


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_1_star_identity():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    worst = 0.0
    for n in DIMS:
        for _ in range(1000):
            t1, t2 = ops.random_hermitian(n, 1, rng), ops.random_hermitian(n, 1, rng)
            p = ops.haar_random_point(n, rng)
            worst = max(worst, abs(star_values(t1, t2, p) - star(t1, t2).geometric(p)))
    elapsed = time.perf_counter() - start
    report(1, "star closed form vs geometric form", worst <= 1e-9 and elapsed < 30,
           f"max |diff| {worst:.3g} (tol 1e-9) over 4000 triples in {elapsed:.1f}s (limit 30s)")


def test_criterion_2_kahler():
    rng = np.random.default_rng(102)
    gauge = jj = ham = 0.0
    for k in range(1000):
        n = DIMS[k % 4]
        p = ops.haar_random_point(n, rng)
        u, v, y = (kg.random_tangent(p, rng) for _ in range(3))
        v2 = kg.tangent_from_generator(p, v.generator + rng.standard_normal() * p + rng.standard_normal() * np.eye(n))
        gauge = max(gauge, abs(kg.symplectic_form(u, v) - kg.symplectic_form(u, v2)),
                    abs(kg.fubini_study_metric(u, v) - kg.fubini_study_metric(u, v2)))
        jj = max(jj, float(np.max(np.abs(kg.complex_structure(kg.complex_structure(v)).value + v.value))))
        a = ops.random_hermitian(n, 1, rng)
        x = kg.hamiltonian_vector_field(a, p, rng, n_probes=0)
        ham = max(ham, abs(kg.symplectic_form(x, y) - kg.directional_derivative(a, y)))
    ok = gauge <= 1e-10 and jj <= 1e-9 and ham <= 1e-8
    report(2, "Kahler structure", ok,
           f"gauge {gauge:.3g} (1e-10), j^2+id {jj:.3g} (1e-9), omega(X_f,Y)-df(Y) {ham:.3g} (1e-8); 1000 probes")


def test_criterion_3_measure():
    rng = np.random.default_rng(103)
    z_max, lio, rep_obs, frame = 0.0, 0.0, 0.0, 0.0
    rep_non = np.inf
    for n in DIMS:
        for _ in range(5):
            a, b = ops.random_hermitian(n, 1, rng), ops.random_hermitian(n, 1, rng)
            e1 = ms.mc_integrate(kg.Observable(a), n, 20_000, rng)
            e2 = ms.mc_integrate(lambda p: ops.expectation(a, p) * ops.expectation(b, p), n, 20_000, rng)
            z_max = max(z_max, e1.z_score(ms.moment1_exact(a)), e2.z_score(ms.moment2_exact(a, b)))
            lio = max(lio, *ms.liouville_defects(ms.liouville_density(ops.random_density(n, rng)), rng))
            mu = MembershipFunction.from_operator(ops.random_projector(n, 1, rng))
            rep_obs = max(rep_obs, ms.dirac_reproducing_check(mu, ops.haar_random_point(n, rng), 1000, rng).defect)
            frame = max(frame, kg.frame_function_deviation(kg.Observable(a), n, 8, rng))
        p0 = ops.projector_onto(ops.basis_vector(n, 0))
        for _, f in nonobservable_corpus(n):
            r = ms.dirac_reproducing_check(MembershipFunction.pointwise(f, n), p0, 20_000, rng)
            rep_non = min(rep_non, r.defect)
    ok = z_max <= 4 and lio < 1e-12 and rep_obs < 1e-9 and rep_non > 0.05 and frame < 1e-9
    report(3, "measure layer", ok,
           f"moment max z {z_max:.2f} (4), Liouville oracle {lio:.3g} (1e-12), reproducing observable "
           f"{rep_obs:.3g} (1e-9), non-observable min {rep_non:.3f} (>0.05), frame {frame:.3g} (1e-9)")


def test_criterion_4_logic():
    rng = np.random.default_rng(104)
    wrong = 0
    pairs_checked = 0
    for n in DIMS:
        mats = [ops.random_projector(n, int(rng.integers(1, n + 1)), rng) for _ in range(100)]
        mats += [perturbed_projector(n, rng) for _ in range(100)]
        wrong += sum(is_idempotent(m) != ops.is_projector(m) for m in mats)
        for a, b in projector_pair_corpus(n, rng, 200):
            probes = probe_points([a, b], rng)
            wrong += is_compatible(a, b, probes) != (np.max(np.abs(ops.commutator(a, b))) < 1e-9)
            wrong += is_orthogonal(a, b, probes) != (np.max(np.abs(a @ b)) < 1e-9)
            pairs_checked += 1
    order_bad = 0
    for k in range(1000):
        n = DIMS[k % 4]
        if k % 2:
            p, q = ordered_projector_pair(n, rng)
        else:
            p, q = (ops.random_projector(n, int(rng.integers(1, n + 1)), rng) for _ in range(2))
        order_bad += ops.projector_leq(p, q) != fuzzy_leq(order_iso_h(p).membership, order_iso_h(q).membership)
    om = 0.0
    for fam in (spin_family(), diagonal_family(3)):
        om = max(om, check_quantum_logic_axioms(build_logic(fam)).orthomodular_error)
    spin = check_quantum_logic_axioms(build_logic(spin_family()))
    witness = ("e1", "+", "~+") in spin.distributivity_witnesses
    ok = wrong == 0 and order_bad == 0 and om <= 1e-9 and witness
    report(4, "logic layer", ok,
           f"{wrong} classification disagreements over {pairs_checked} pairs + 800 idempotence cases, "
           f"{order_bad} order mismatches over 1000 pairs, orthomodular {om:.3g} (1e-9), "
           f"witness (P_e1, P_+, P_-) {'found' if witness else 'missing'}")


def test_criterion_5_join_meet():
    rng = np.random.default_rng(105)
    worst, count = 0.0, 0
    fams = [spin_family(), diagonal_family(3), diagonal_family(4)]
    fams += [[commuting_projector_pair(n, rng)[0] for _ in range(3)] for n in DIMS]
    for fam in fams:
        L = build_logic(fam)
        g = L.generators
        for i, j in itertools.combinations_with_replacement(range(L.size), 2):
            if L.compat[i, j]:
                jn, mt = join_meet_membership(g[i], g[j])
                worst = max(worst, float(np.max(np.abs(jn.generator - ops.lattice_join(g[i], g[j])))),
                            float(np.max(np.abs(mt.generator - ops.lattice_meet(g[i], g[j])))))
                count += 1
    report(5, "star join/meet vs operator lattice", worst <= 1e-9,
           f"max |diff| {worst:.3g} (1e-9) over {count} compatible pairs")


def test_criterion_6_theorem_harnesses():
    start = time.perf_counter()
    vals, names = indicator_family(3)
    mik = theorem_mik_check(vals, names)
    main = theorem_main_harness(spin_family(), "operator", np.random.default_rng(106))
    elapsed = time.perf_counter() - start
    ok = (mik.passed and mik.boolean and main.passed
          and main.boolean_sublattices == main.commuting_subfamilies and elapsed < 60)
    report(6, "functional and deformed t-norm logic harnesses", ok,
           f"indicator Boolean {mik.boolean}, spin hypotheses {main.hypotheses_hold}, conclusions "
           f"{all(c.passed for c in main.conclusions.values())}, sublattices {main.boolean_sublattices} "
           f"= commuting {main.commuting_subfamilies}; {elapsed:.1f}s (limit 60s)")


def test_criterion_7_dynamics():
    rng = np.random.default_rng(107)
    z, plus = ops.PAULI_Z, ops.projector_onto([1, 1])
    grid = np.linspace(0, 2 * np.pi, 65)
    exact = dyn.schrodinger_flow(z, plus, grid)
    dev = dyn.max_flow_deviation(dyn.hamilton_flow(z, plus, grid, 1e-3), exact)
    d1 = dyn.max_flow_deviation(dyn.hamilton_flow(z, plus, grid, 1e-2), exact)
    d2 = dyn.max_flow_deviation(dyn.hamilton_flow(z, plus, grid, 5e-3), exact)
    lt = 0.0
    for n in DIMS:
        h = ops.random_hermitian(n, 1, rng)
        lt = max(lt, dyn.liouville_transport_check(ops.random_density(n, rng), h, 1.0,
                                                   ops.haar_random_points(n, 64, rng)))
    ok = dev < 1e-8 and 8 <= d1 / d2 <= 32 and lt < 1e-10
    report(7, "Hamiltonian vs Schrodinger flow", ok,
           f"deviation {dev:.3g} (1e-8) at dt 1e-3, halving ratio {d1 / d2:.2f} ([8, 32]), transport {lt:.3g} (1e-10)")


def test_criterion_8_tnorms():
    reports = [tnorm_axiom_check(t, 101) for t in (LUKASIEWICZ, PRODUCT)]
    worst = max(max(r.violations.values()) for r in reports)
    bad = tnorm_axiom_check(TNorm("min_squared", lambda x, y: np.minimum(x, y) ** 2), 101)
    unit_ok = abs(bad.violations["unit"] - 0.25) < 1e-12 and bad.witnesses["unit"] == (0.5,)
    ok = all(r.passed for r in reports) and unit_ok
    report(8, "t-norm axioms", ok,
           f"Lukasiewicz/product max violation {worst:.3g} (zero up to 1e-12 rounding), counterexample unit "
           f"violation {bad.violations['unit']} at x = {bad.witnesses['unit'][0]}")


def test_criterion_9_determinism(tmp_path):
    env = dict(os.environ, SOURCE_DATE_EPOCH="0")
    outs = []
    for k, workers in enumerate((1, 1, 4)):
        out = tmp_path / f"r{k}.json"
        cmd = [sys.executable, "-m", "projlogic.cli", "verify", "all", "--dim", "3", "--seed", "7",
               "--workers", str(workers), "--report", str(out)]
        code = subprocess.run(cmd, env=env).returncode
        assert code in (0, 1)
        outs.append(out.read_bytes())
    ok = outs[0] == outs[1] == outs[2]
    report(9, "determinism", ok,
           f"verify all --dim 3 --seed 7: two serial runs and a 4-worker run "
           f"{'byte-identical' if ok else 'differ'} ({len(outs[0])} bytes)")
