"""Exact decision procedures for graded Frobenius and graded symmetric algebras."""

from .scalars import Field, QQ, prime_field, parse_field, ScalarError
from .groups import (FiniteGroup, GroupError, make_cyclic, make_from_table,
                     make_product, subgroup_closure, is_normal, trivial_group)
from .linalg import (Budget, GenericInvertibilityVerdict, Matrix, generic_invertible,
                     identity, kernel_basis, matrix, rank, solve)
from .algebra import (AlgebraError, GradedAlgebra, GradedLinearMap, GradedModule,
                      centralizer, center, coarsen_grading, degree_e_subalgebra,
                      dual_module, is_graded_division, regular_module,
                      restrict_to_subgroup, suspend_left, suspend_right,
                      tensor_product, ungrade, validate_algebra, validate_module)
from .homs import (CoinducedModule, IsoVerdict, coinduce, coinduction_unit,
                   graded_hom_basis, graded_iso, morphism_violations)
from .frobenius import (Certificate, InternalInconsistencyError, Refutation, Verdict,
                        graded_division_symmetry_hypothesis, inertia_group,
                        is_frobenius, is_graded_symmetric, is_local,
                        is_sigma_graded_frobenius, is_strongly_graded, is_symmetric,
                        jacobson_radical, left_sigma_faithful, right_sigma_faithful,
                        scan_sigma, torsion_radical, verify_certificate)
from .constructions import (ConstructionSpec, build_construction, group_algebra,
                            matrix_fine_grading, matrix_good_grading,
                            matrix_over, nakayama_nesbitt, named_base_algebra,
                            poly_quotient, random_graded_algebra, skew_group_algebra,
                            symmetric_group_3, trivial_extension, trivial_extension_split)
from .fileformat import (ParseError, parse_algebra_text, parse_certificate,
                         render_algebra, render_certificate)

__version__ = "0.1.0"
