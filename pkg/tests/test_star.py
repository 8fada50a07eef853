import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projlogic import operators as ops
from projlogic.errors import CertificationError, IncompatibleError
from projlogic.families import diagonal_family, spin_family
from projlogic.star import (
    FuzzyEvent, build_logic, check_gpm, check_quantum_logic_axioms, density_state,
    is_compatible, is_idempotent, is_orthogonal, join_meet, join_meet_membership, order_iso_h,
    ordering_set_check, star, star_values,
)

E1, E2 = ops.projector_onto([1, 0]), ops.projector_onto([0, 1])
PLUS = ops.projector_onto([1, 1])
P12 = ops.projector_onto([1, 0, 0], [0, 1, 0])
P23 = ops.projector_onto([0, 1, 0], [0, 0, 1])


def test_star_examples(rng):
    pts = ops.haar_random_points(2, 20, rng)
    assert np.allclose(star_values(E1, E1, pts), ops.expectation(E1, pts))
    assert np.isclose(star_values(E1, PLUS, E1), 0.5)
    # at the circular state the product picks up an imaginary Poisson part
    y = ops.projector_onto([1, 1j])
    assert np.isclose(star_values(E1, PLUS, y), 0.25 + 0.25j)
    assert np.isclose(ops.expectation(E1, y) * ops.expectation(PLUS, y), 0.25)
    assert np.allclose(star_values(PLUS, E1, pts), np.conj(star_values(E1, PLUS, pts)))


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 5), seed=st.integers(0, 2**32 - 1))
def test_star_closed_form_matches_geometric(n, seed):
    r = np.random.default_rng(seed)
    a, b = ops.random_hermitian(n, 1, r), ops.random_hermitian(n, 1, r)
    assert star(a, b).deviation(ops.haar_random_points(n, 5, r)) < 1e-9


def test_idempotent_examples():
    assert is_idempotent(P12) and is_idempotent(np.eye(3))
    assert not is_idempotent(0.5 * ops.projector_onto([1, 0, 0]))


def test_compatible_orthogonal_examples():
    assert is_compatible(E1, E2) and is_orthogonal(E1, E2)
    assert not is_compatible(E1, PLUS) and not is_orthogonal(E1, PLUS)
    assert is_orthogonal(PLUS, np.eye(2) - PLUS)


def test_join_meet_examples():
    j, m = join_meet_membership(E1, E2)
    assert np.allclose(j.generator, np.eye(2)) and np.allclose(m.generator, 0)
    j, m = join_meet_membership(E1, E1)
    assert np.allclose(j.generator, E1) and np.allclose(m.generator, E1)
    j, m = join_meet_membership(P12, P23)
    assert np.allclose(m.generator, ops.projector_onto([0, 1, 0])) and np.allclose(j.generator, np.eye(3))
    with pytest.raises(IncompatibleError):
        join_meet_membership(E1, PLUS)
    assert join_meet(E1, PLUS)[2] == "operator-lattice"


def test_order_isomorphism(rng):
    assert np.allclose(order_iso_h(np.zeros((2, 2)))(ops.haar_random_points(2, 5, rng)), 0)
    assert np.allclose(order_iso_h(np.eye(2))(ops.haar_random_points(2, 5, rng)), 1)
    p1 = ops.projector_onto([1, 0, 0])
    from projlogic.fuzzy import fuzzy_leq
    assert fuzzy_leq(order_iso_h(p1).membership, order_iso_h(P12).membership)
    assert not fuzzy_leq(order_iso_h(P12).membership, order_iso_h(p1).membership)


def test_small_logics():
    L = build_logic([np.zeros((2, 2))])
    assert L.size == 2
    L = build_logic([E1])
    assert L.size == 4 and L.compat.all()
    assert check_quantum_logic_axioms(L).distributive


def test_two_line_closure_has_four_incompatible_pairs():
    L = build_logic([E1, PLUS])
    assert L.size == 6
    assert int((~L.compat).sum()) // 2 == 4
    rep = check_quantum_logic_axioms(L)
    assert rep.passed and not rep.distributive


def test_diagonal_family_boolean():
    rep = check_quantum_logic_axioms(build_logic(diagonal_family(3)))
    assert rep.passed and rep.distributive


def test_spin_family_witness():
    L = build_logic(spin_family())
    rep = check_quantum_logic_axioms(L)
    assert rep.passed and rep.orthomodular_error < 1e-9
    assert ("e1", "+", "~+") in rep.distributivity_witnesses
    e1, plus, minus = (L.generators[L.labels.index(k)] for k in ("e1", "+", "~+"))
    lhs = ops.lattice_meet(e1, ops.lattice_join(plus, minus))
    rhs = ops.lattice_join(ops.lattice_meet(e1, plus), ops.lattice_meet(e1, minus))
    assert np.allclose(lhs, e1) and np.allclose(rhs, 0)


def test_states(rng):
    L = build_logic(spin_family())
    assert check_gpm(density_state(ops.random_density(2, rng)), L).passed
    bad = check_gpm(lambda e: 1.0, L)
    assert not bad.passed and np.isclose(bad.additivity_error, 1.0)
    assert ordering_set_check(None, L).passed


def test_certification_conflict_detected():
    # a probe set that misses the non-commuting directions cannot hide them
    probes = np.array([np.eye(2) / 2])
    with pytest.raises(CertificationError):
        is_compatible(E1, PLUS, probes)


def test_from_operator_flags_projectors():
    assert FuzzyEvent.from_operator(E1).projector
    assert not FuzzyEvent.from_operator(0.5 * E1).projector
