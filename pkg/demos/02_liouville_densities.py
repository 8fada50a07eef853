"""
Liouville densities and the reproducing property
=================================================

Every density matrix sigma defines a signed density on P(H) with respect
to the unitarily invariant measure. Integrating an observable-type
membership function against the density of a pure state returns its value
at that state; other fields do not have this property.
"""

import numpy as np

from projlogic import measure as ms, operators as ops
from projlogic.corpora import nonobservable_corpus
from projlogic.fuzzy import MembershipFunction

rng = np.random.default_rng(1)
n = 3

sigma = ops.random_density(n, rng)
rho = ms.liouville_density(sigma)
print("integral of rho           :", rho.integral())
print("min of rho on 10^4 points :", rho(ops.haar_random_points(n, 10_000, rng)).min())

# the offset-1 variant integrates to n instead of 1
print("offset-1 variant integral :", ms.liouville_density(sigma, "unit_offset", certify=False).integral())

# Monte Carlo against the moment oracle
a = ops.random_hermitian(n, 1.0, rng)
est = ms.mc_integrate(lambda p: ops.expectation(a, p) ** 2, n, 20_000, rng)
print(f"E[f_A^2] = {est.mean:.4f} +- {est.std_error:.4f}, oracle {ms.moment2_exact(a, a):.4f}")

p0 = ops.projector_onto(ops.basis_vector(n, 0))
obs = MembershipFunction.from_operator(ops.random_projector(n, 2, rng))
print("observable field defect   :", ms.dirac_reproducing_check(obs, p0, 1000, rng).defect)
for name, f in nonobservable_corpus(n):
    r = ms.dirac_reproducing_check(MembershipFunction.pointwise(f, n), p0, 20_000, rng)
    print(f"{name:>8} field defect   : {r.defect:.3f} +- {r.std_error:.3f}")
