import numpy as np
import pytest

from projlogic import measure as ms, operators as ops
from projlogic.corpora import nonobservable_corpus
from projlogic.errors import NormalizationError
from projlogic.fuzzy import MembershipFunction

Z = ops.PAULI_Z
P0 = np.diag([1, 0]).astype(complex)


def test_mc_constant_field(rng):
    est = ms.mc_integrate(lambda p: np.ones(len(p)), 3, 1000, rng)
    assert est.mean == 1.0 and est.std_error == 0.0
    with pytest.raises(ValueError):
        ms.mc_integrate(lambda p: np.ones(len(p)), 3, 10, rng)


def test_mc_first_moment_examples(rng):
    assert ms.mc_integrate(lambda p: ops.expectation(Z, p), 2, 20_000, rng).within(0.0)
    a = np.diag([1.0, 2.0, 3.0]).astype(complex)
    assert ms.moment1_exact(a) == 2.0
    assert ms.mc_integrate(lambda p: ops.expectation(a, p), 3, 20_000, rng).within(2.0)


def test_second_moment_oracle(rng):
    assert np.isclose(ms.moment2_exact(Z, Z), 1 / 3)
    est = ms.mc_integrate(lambda p: ops.expectation(Z, p) ** 2, 2, 20_000, rng)
    assert est.within(1 / 3)


def test_liouville_examples(rng):
    flat = ms.liouville_density(np.eye(3) / 3)
    assert np.allclose(flat(ops.haar_random_points(3, 20, rng)), 1.0)
    pure = ms.liouville_density(ops.projector_onto([1, 0, 0]))
    assert np.isclose(pure(ops.projector_onto([1, 0, 0])), 9.0)
    assert np.isclose(pure(ops.projector_onto([0, 1, 0])), -3.0)


def test_liouville_identities_exact(rng):
    for n in (2, 3, 5):
        rho = ms.liouville_density(ops.random_density(n, rng))
        norm_err, exp_err = ms.liouville_defects(rho, rng)
        assert norm_err < 1e-12 and exp_err < 1e-12


def test_unit_offset_variant_integrates_to_n(rng):
    for n in (2, 3, 4):
        assert np.isclose(ms.liouville_density(np.eye(n) / n, variant="unit_offset", certify=False).integral(), n)


def test_basis_sums(rng):
    basis = ops.haar_random_basis(4, rng)
    pts = ops.haar_random_points(4, 10, rng)
    assert np.allclose(ms.liouville_basis_sum(basis, pts), 4)
    assert np.allclose(ms.liouville_basis_sum(basis, pts, "unit_offset"), 16)


def test_fuzzy_event_probability(rng):
    mu = MembershipFunction.from_operator(P0)
    assert np.isclose(ms.fuzzy_event_probability(mu, ms.liouville_density(np.eye(2) / 2), 2, 1000, rng).mean, 0.5)
    one = MembershipFunction.constant(1.0, 3)
    sigma = ops.random_density(3, rng)
    assert np.isclose(ms.fuzzy_event_probability(one, ms.liouville_density(sigma), 3, 1000, rng).mean, 1.0)
    with pytest.raises(NormalizationError):
        ms.fuzzy_event_probability(mu, lambda p: 3 * np.ones(len(p)), 2, 2000, rng)


def test_reproducing_examples(rng):
    mu = MembershipFunction.from_operator((Z + np.eye(2)) / 2)
    assert ms.dirac_reproducing_check(mu, P0, 1000, rng).defect < 1e-12
    assert ms.dirac_reproducing_check(MembershipFunction.constant(0.4, 2), P0, 1000, rng).defect < 1e-12
    # tr(Z p)^2 against rho = 1 + 3z with z uniform on [-1, 1]: integral 1/3, target 1
    sq = MembershipFunction.pointwise(lambda p: ops.expectation(Z, p) ** 2, 2)
    r = ms.dirac_reproducing_check(sq, P0, 50_000, rng)
    assert abs(r.defect - 2 / 3) < 4 * r.std_error


def test_square_field_defect_closed_form(rng):
    # x = tr(P_e1 p): E[x^2 rho] = 6 / (n + 2) - 2 / (n + 1), target 1
    for n in (2, 3):
        f = dict(nonobservable_corpus(n))["square"]
        p0 = ops.projector_onto(ops.basis_vector(n, 0))
        r = ms.dirac_reproducing_check(MembershipFunction.pointwise(f, n), p0, 50_000, rng)
        assert abs(r.defect - (1 - (6 / (n + 2) - 2 / (n + 1)))) < 4 * r.std_error


def test_merge_estimates(rng):
    f = lambda p: ops.expectation(Z, p)
    parts = [ms.mc_integrate(f, 2, 500, rng) for _ in range(4)]
    merged = ms.merge_estimates(parts)
    assert merged.n_samples == 2000
    assert np.isclose(merged.mean, np.mean([e.mean for e in parts]))
