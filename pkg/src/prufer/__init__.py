"""Exact pseudo-matrix calculus over Z and maximal quadratic orders."""

from .domains import ZZ, QuadraticOrder, make_domain
from .errors import (DimensionError, DomainError, EmptyIdealError, InvariantViolation,
                     MalformedInputError, NotInvertibleError, PreconditionError, PruferError,
                     ValidationError)
from .hermite import (complete_surjective, cokernel_structure, double_hermite,
                      image_pseudobasis, kernel_pseudobasis)
from .ideals import (FgIdeal, colon_split, ideal_includes, ideal_intersect, ideal_inverse,
                     ideal_mul, ideal_sum, loc_matrix, member, principal, simplify, unit_ideal,
                     zero_ideal)
from .linsolve import solvable_by_ideals, solve_full
from .pseudo import (PseudoBasis, PseudoMatrix, det_ideal, determinantal_chain,
                     determinantal_ideal, pm_inverse, pm_mul, usual)
from .smith import (smith_bezout_dim1, smith_change_pseudobasis_square,
                    smith_change_pseudobasis_wide, smith_pseudo_dedekind, torsion_structure)

__version__ = "0.1.0"
