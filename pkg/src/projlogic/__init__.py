"""Geometric quantization of fuzzy logic on complex projective space.

Numerical tools for the Kähler geometry of P(H), Liouville densities, the
star product on observable-type membership functions and the quantum logic
of star-idempotent fuzzy events, together with verification suites.
"""

__version__ = "0.1.0"

from .config import Tolerances, tol, use_tolerances
from .errors import (
    CertificationError, DimensionError, IncompatibleError, InvariantError, NonHermitianError,
    NormalizationError, ProjLogicError, RankDeficientError, StepSizeError,
)
from .operators import (
    PAULI_X, PAULI_Y, PAULI_Z, haar_random_point, haar_random_points, lattice_join,
    lattice_meet, orthocomplement, projector_leq, random_hermitian, random_projector,
)
from .kahler import (
    Observable, TangentVector, complex_structure, fubini_study_metric,
    hamiltonian_vector_field, observable_fit, poisson_bracket, symplectic_form,
    tangent_from_generator,
)
from .measure import (
    MonteCarloEstimate, dirac_reproducing_check, liouville_density, mc_integrate,
    moment1_exact, moment2_exact,
)
from .fuzzy import LUKASIEWICZ, PRODUCT, MembershipFunction, TNorm, tnorm_axiom_check
from .star import (
    FuzzyEvent, build_logic, check_gpm, check_quantum_logic_axioms, is_compatible,
    is_idempotent, is_orthogonal, join_meet, ordering_set_check, star,
)
from .theorems import theorem_main_harness, theorem_mik_check
from .dynamics import hamilton_flow, schrodinger_flow
from .suites import CheckRecord, SuiteConfig, run_suite
from .report import emit_report, load_report
