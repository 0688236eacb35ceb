"""berger-lab: exact-arithmetic verification of curvature spaces, Berger
closures, and prolongations for holonomy candidates on realified
pseudo-quaternionic-Hermitian spaces."""

from .exactlin import (RealMatrix, Rational, Subspace, nullspace, rank, rref,
                       span_of, subspace_contains, subspace_equal)
from .quatspace import (Quaternion, QuatMatrix, QuaternionicSpace, build_space,
                        realify)
from .liealg import (LieAlgebra, algebra_by_name, build_glq, build_h0, build_sp,
                     build_sp1, build_sp_parabolic, direct_sum,
                     preserves_subspace)
from .curvature import (CurvatureElement, CurvatureSpace, act, bianchi_kernel,
                        build_r0, build_r1, derivative_space,
                        restrict_check_degenerate, ricci, scalar)
from .prolong import (ProlongationSpace, first_prolongation,
                      first_prolongation_of, restrict_action,
                      second_prolongation, second_prolongation_of)
from .berger import BergerReport, berger_closure, berger_report, holonomy_case_split

__version__ = "0.1.0"
