"""
From a deformed t-norm to a quantum logic
==========================================

The harness keeps the star-idempotent events of a family, checks the
closure hypotheses and then the logical conclusions. Boolean sublattices
are found among pairs where the star formulas reproduce meet and join.
"""

import numpy as np

from projlogic.families import diagonal_family, spin_family
from projlogic.theorems import indicator_family, theorem_main_harness, theorem_mik_check

rng = np.random.default_rng(2)

vals, names = indicator_family(3)
r = theorem_mik_check(vals, names)
print("indicator family: passed", r.passed, "Boolean", r.boolean)

for label, fam in (("diagonal n=3", diagonal_family(3)), ("spin n=2", spin_family())):
    r = theorem_main_harness(fam, "operator", rng)
    print(f"{label}: passed {r.passed}")
    for k, c in {**r.hypotheses, **r.conclusions}.items():
        print(f"   {k:32s} {c.passed}")
    print("   Boolean sublattices:", r.boolean_sublattices)

# with the undeformed product only 0 and 1 survive
r = theorem_main_harness(spin_family(), "pointwise", rng)
print("pointwise product idempotents:", r.idempotent_labels)
