"""Multiaffine polynomials, matroids, and half-plane (Hurwitz) testing.

The package is organized around five areas:

  poly       sparse multiaffine / multi-index polynomial algebra and the
             stability-preserving constructions (duality, connections,
             weighted truncations and extensions, folding, convolution,
             polarization, differential operators)
  matroids   explicit-basis matroids: axioms, minors, duality, sums,
             relaxation, union, transversal and graphic constructors
  catalog    the named matroid catalog with fixed element numbering
  hpp        randomized and exact half-plane tests with verifiable
             counterexample certificates
  represent  polynomials from matrices (all-minors determinant and
             permanent constructions), matching polynomials, and the
             exact rational niceness solvers (niceness module)
"""

from .catalog import catalog, catalog_manifest, catalog_names, rank3_from_lines, uniform_matroid
from .hpp import (
    Counterexample,
    DEFAULT_TOL,
    HppReport,
    Rank2Result,
    ToleranceConfig,
    brown_colbourn_uniform,
    counterexample_verify,
    fettweis_gap_check,
    hpp_random_elementary,
    hpp_random_rays,
    jacobi_eigenvalues,
    local_hpp_probe,
    rank2_exact,
    ray_polynomial,
    ray_test_homogeneous,
    shifted_hpp_random,
)
from .matroids import (
    Graph,
    Matroid,
    NotMatroidalError,
    Presentation,
    complete_graph,
    connected,
    constant_sum_jump_check,
    direct_sum,
    exchangeable,
    graphic_matroid,
    matroid_dual,
    matroid_union_fullrank,
    minor,
    parallel_connection_m,
    series_connection_m,
    support_matroid,
    transversal_matroid,
    two_sum_m,
    verify_basis_axioms,
)
from .niceness import (
    NicenessSolution,
    nice_cotruncation_solve,
    nice_principal_solve,
    transversal_weight_verify,
)
from .poly import (
    Disc,
    GeneralPolynomial,
    GroundSetError,
    MultiAffinePolynomial,
    RightHalfPlane,
    apply_diff_operator,
    coefficient_slices,
    connection_index_map,
    convolution,
    evaluate,
    fettweis_transform,
    fold_mod2,
    gws_witness,
    leading_part,
    multiaffine_part,
    parallel_connection,
    polarize,
    polarization_blocks,
    principal_coextension,
    principal_cotruncation,
    principal_extension,
    principal_truncation,
    same_phase,
    series_connection,
    two_sum,
)
from .represent import (
    det_construction,
    matching_polynomial,
    minor_det,
    minor_per,
    per_construction,
    permanent,
    unimodular_minor_check,
)
from .roots import RootSet, univariate_roots

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
