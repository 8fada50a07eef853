import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projlogic import kahler as kg, operators as ops
from projlogic.errors import CertificationError

X, Y, Z = ops.PAULI_X, ops.PAULI_Y, ops.PAULI_Z
P0 = np.diag([1, 0]).astype(complex)
PLUS = ops.projector_onto([1, 1])


def test_tangent_examples():
    assert np.allclose(kg.tangent_from_generator(P0, P0).value, 0)
    v = kg.tangent_from_generator(P0, X)
    assert np.allclose(v.value, -1j * (X @ P0 - P0 @ X))
    v.validate()
    again = kg.tangent_from_generator(P0, v.generator)
    assert np.allclose(again.value, v.value) and np.allclose(again.generator, v.generator)


def test_symplectic_and_metric_examples():
    u, v = kg.tangent_from_generator(P0, X), kg.tangent_from_generator(P0, Y)
    assert kg.symplectic_form(u, u) == 0
    assert np.isclose(kg.symplectic_form(u, v), 2.0, atol=1e-14)
    assert np.isclose(kg.fubini_study_metric(u, u), 2.0, atol=1e-14)
    shifted = kg.tangent_from_generator(P0, Y + 3 * P0)
    assert abs(kg.symplectic_form(u, shifted) - 2.0) < 1e-10
    zero = kg.tangent_from_generator(P0, Z)
    assert kg.fubini_study_metric(zero, u) == 0


def test_complex_structure_zero():
    zero = kg.tangent_from_generator(P0, np.eye(2))
    assert np.allclose(kg.complex_structure(zero).value, 0)


def test_hamiltonian_field_examples(rng):
    assert np.allclose(kg.hamiltonian_vector_field(np.eye(2), PLUS, rng).value, 0)
    x = kg.hamiltonian_vector_field(Z, PLUS, rng)
    assert np.allclose(x.value, -1j * ops.commutator(Z, PLUS)) and np.max(np.abs(x.value)) > 0.5
    assert np.allclose(kg.hamiltonian_vector_field(2 * Z, PLUS, rng).value, 2 * x.value)


def test_poisson_examples(rng):
    assert kg.poisson_bracket(X, X, P0) == 0
    assert np.isclose(kg.poisson_bracket(X, Y, P0), 2.0, atol=1e-14)


def test_observable_fit_examples(rng):
    t, res = kg.observable_fit(kg.Observable(X), 2, None, rng)
    assert np.max(np.abs(t - X)) < 1e-8 and res < 1e-10
    _, res = kg.observable_fit(lambda p: ops.expectation(Z, p) ** 2, 2, None, rng)
    assert res > 0.01
    t, res = kg.observable_fit(lambda p: np.full(len(p), 0.3), 2, None, rng)
    assert np.allclose(t, 0.3 * np.eye(2), atol=1e-10) and res < 1e-10
    with pytest.raises(ValueError):
        kg.observable_fit(kg.Observable(X), 2, 5, rng)


def test_frame_examples(rng):
    sq = lambda p: ops.expectation(Z, p) ** 2
    standard = np.eye(2)
    diagonal = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    assert np.isclose(kg.basis_sum_deviation(sq, [standard, diagonal]), 1.0)
    assert kg.frame_function_deviation(lambda p: np.ones(len(p)), 2, 4, rng) == 0
    assert kg.frame_function_deviation(kg.Observable(ops.random_hermitian(3, 1, rng)), 3, 6, rng) < 1e-12


def test_real_trace_guard():
    with pytest.raises(CertificationError):
        kg._real_trace(1 + 1e-3j)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(2, 5), seed=st.integers(0, 2**32 - 1))
def test_kahler_identities(n, seed):
    r = np.random.default_rng(seed)
    p = ops.haar_random_point(n, r)
    u, v = kg.random_tangent(p, r), kg.random_tangent(p, r)
    ju = kg.complex_structure(u)
    assert np.max(np.abs(kg.complex_structure(ju).value + u.value)) < 1e-9
    assert kg.kahler_defect(u, v) < 1e-8
    assert kg.fubini_study_metric(u, u) >= -1e-12
    a = ops.random_hermitian(n, 1.0, r)
    x = kg.tangent_from_generator(p, a)
    assert abs(kg.symplectic_form(x, v) - kg.directional_derivative(a, v)) < 1e-8


def test_poisson_fd_matches_closed_form(rng):
    p = ops.haar_random_point(3, rng)
    a, b = ops.random_hermitian(3, 1, rng), ops.random_hermitian(3, 1, rng)
    assert abs(kg.poisson_bracket_fd(a, kg.Observable(b), p) - kg.poisson_bracket(a, b, p)) < 1e-6
