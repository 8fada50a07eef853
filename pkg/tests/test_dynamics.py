import numpy as np
import pytest

from projlogic import dynamics as dyn, operators as ops
from projlogic.errors import StepSizeError

Z = ops.PAULI_Z
PLUS, MINUS = ops.projector_onto([1, 1]), ops.projector_onto([1, -1])
P0 = np.diag([1, 0]).astype(complex)


def test_exact_flow_examples():
    t = np.linspace(0, 3, 7)
    assert np.allclose(dyn.schrodinger_flow(np.eye(2), PLUS, t).trajectory, PLUS)
    assert np.allclose(dyn.schrodinger_flow(Z, P0, t).trajectory, P0)
    end = dyn.schrodinger_flow(Z, PLUS, [np.pi / 2]).trajectory[0]
    assert np.max(np.abs(end - MINUS)) < 1e-10


def test_rk4_matches_exact():
    grid = np.linspace(0, 2 * np.pi, 17)
    d = dyn.max_flow_deviation(dyn.hamilton_flow(Z, PLUS, grid, 1e-3), dyn.schrodinger_flow(Z, PLUS, grid))
    assert d < 1e-8


def test_rk4_order_four():
    grid = np.linspace(0, 2 * np.pi, 17)
    exact = dyn.schrodinger_flow(Z, PLUS, grid)
    d1 = dyn.max_flow_deviation(dyn.hamilton_flow(Z, PLUS, grid, 1e-2), exact)
    d2 = dyn.max_flow_deviation(dyn.hamilton_flow(Z, PLUS, grid, 5e-3), exact)
    assert 8 <= d1 / d2 <= 32


def test_step_size_guard():
    with pytest.raises(StepSizeError):
        dyn.hamilton_flow(10 * Z, PLUS, [0, 1], 1e-2)


def test_liouville_transport(rng):
    probes = ops.haar_random_points(3, 20, rng)
    h = ops.random_hermitian(3, 1, rng)
    assert dyn.liouville_transport_check(np.eye(3) / 3, h, 1.0, probes) < 1e-14
    assert dyn.liouville_transport_check(ops.random_density(3, rng), h, 0.0, probes) < 1e-14
    assert dyn.liouville_transport_check(ops.random_density(2, rng), Z, 1.0,
                                         ops.haar_random_points(2, 20, rng)) < 1e-10
