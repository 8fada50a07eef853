"""
The star product and the spin-1/2 quantum logic
================================================

For fuzzy events mu(p) = tr(T p) the star product is tr(T_1 T_2 p). It
equals the pointwise product plus an imaginary Poisson term and a real
metric term. Star-idempotent events are exactly the projectors, and they
form an orthomodular but non-distributive logic.
"""

import numpy as np

from projlogic import operators as ops
from projlogic.families import spin_family
from projlogic.star import build_logic, check_quantum_logic_axioms, star, star_values

e1, plus = ops.projector_onto([1, 0]), ops.projector_onto([1, 1])
y = ops.projector_onto([1, 1j])   # the circular state

print("star at |y>      :", star_values(e1, plus, y))
print("pointwise at |y> :", ops.expectation(e1, y) * ops.expectation(plus, y))
print("geometric form   :", star(e1, plus).geometric(y))

L = build_logic(spin_family())
print("elements:", L.labels)
print("compatibility:\n", L.compat.astype(int))

rep = check_quantum_logic_axioms(L)
print("orthomodular error", rep.orthomodular_error)
print("distributive      ", rep.distributive)
print("a witness triple  ", ("e1", "+", "~+") in rep.distributivity_witnesses and ("e1", "+", "~+"))
