"""Solutions of the set-theoretic tetrahedron equation on two colors.

Exhaustive search, sigma-symmetry orbits, integer 3-cohomology of the
tetrahedral complex, and the quantum tetrahedron equation for
cocycle-twisted operators.
"""

from .boolfun import anf_from_tt, parse_poly, print_poly, tt_from_anf
from .cohomology import CohomologyReport, cohomology3, verify_statement
from .intlinalg import AbelianGroup, Lattice, image_lattice, kernel_lattice, quotient, snf
from .quantum import Cocycle, build_qoperator, check_qte, embed_on_legs
from .rmap import (
    IDENTITY,
    RMap,
    apply,
    apply_at,
    image_cardinality,
    is_bijective,
    satisfies_stte,
    sigma1_conjugate,
    sigma2_conjugate,
)
from .search import (
    ConsistencyError,
    Orbit,
    SolutionSet,
    enumerate_solutions,
    histogram_by_image_cardinality,
    orbit_decomposition,
)

__version__ = "0.1.0"
