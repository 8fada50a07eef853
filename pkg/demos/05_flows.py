"""
Hamiltonian flow on P(H) versus Schrodinger evolution
=====================================================

Integrating the Hamiltonian vector field of f_H with RK4 reproduces the
unitary orbit; Liouville densities are carried along by the same flow.
"""

import numpy as np

from projlogic import dynamics as dyn, operators as ops

h, p0 = ops.PAULI_Z, ops.projector_onto([1, 1])
grid = np.linspace(0, 2 * np.pi, 33)
exact = dyn.schrodinger_flow(h, p0, grid)

for dt in (1e-2, 5e-3, 1e-3):
    d = dyn.max_flow_deviation(dyn.hamilton_flow(h, p0, grid, dt), exact)
    print(f"dt = {dt:.0e}: max deviation {d:.3e}")

rng = np.random.default_rng(3)
sigma = ops.random_density(2, rng)
print("transport defect:", dyn.liouville_transport_check(sigma, h, 1.0, ops.haar_random_points(2, 64, rng)))
