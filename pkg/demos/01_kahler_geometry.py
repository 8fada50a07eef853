"""
Kähler geometry of the qubit phase space
=========================================

Tangent vectors, the symplectic form, the Fubini-Study metric and the
complex structure at a point of P(C^2).
"""

import numpy as np

from projlogic import kahler as kg, operators as ops

# the north pole of the Bloch sphere
p = np.diag([1, 0]).astype(complex)

# tangent vectors generated by two Pauli matrices
u = kg.tangent_from_generator(p, ops.PAULI_X)
v = kg.tangent_from_generator(p, ops.PAULI_Y)
print("omega(u, v) =", kg.symplectic_form(u, v))
print("g(u, u)     =", kg.fubini_study_metric(u, u))

# sigma_z commutes with p, so it generates the zero vector
print("|v_z|       =", np.abs(kg.tangent_from_generator(p, ops.PAULI_Z).value).max())

# at this point j carries the sigma_x direction onto the sigma_y direction
ju = kg.complex_structure(u)
print("|j u - v|   =", np.abs(ju.value - v.value).max())

# compatibility of metric, form and j: g(u, v) = omega(u, j v)
print("kahler defect", kg.kahler_defect(u, v))

# the Hamiltonian field of f_H is the Schrodinger velocity -i[H, p]
rng = np.random.default_rng(0)
x = kg.hamiltonian_vector_field(ops.PAULI_Z, ops.projector_onto([1, 1]), rng)
print("X_H at |+> =\n", np.round(x.value, 12))
