"""quiver-lss: generic and locally semi-simple decompositions of quiver representations.

Exact integer computations on acyclic quivers: Euler and Tits forms, generic
hom/ext dimensions, Schur roots, generic decompositions, perpendicular
categories of real Schur roots and sequences, generic locally semi-simple
decompositions, Luna strata and semi-invariant generators of prehomogeneous
dimension vectors. The ``oracle`` module checks results against explicit
representations sampled over a large prime field.

Environment Variables:
    QUIVER_LSS_PRIME: Field modulus for oracle sampling (default: 2147483647)
    QUIVER_LSS_TRIALS: Oracle samples per query (default: 5)
    QUIVER_LSS_SEED: Oracle RNG seed (default: 0)
    QUIVER_LSS_VERBOSE: 1 to report progress on stderr

Example:
    >>> from quiver_lss import Quiver, generic_decomposition
    >>> kronecker = Quiver(2, ((0, 1), (0, 1)))
    >>> print(generic_decomposition(kronecker, (3, 3)))
    3 x (1,1) [isotropic]
"""

from quiver_lss import oracle
from quiver_lss._config import OracleConfig, load_config
from quiver_lss._errors import (
    ArithmeticOverflowError,
    ConfigError,
    DecompositionOrderError,
    DimensionMismatchError,
    ExpansionError,
    HomNotTrivialError,
    LocalQuiverError,
    LssStageError,
    NegativeArrowCountError,
    NegativeExpansionError,
    NegativeExtError,
    NonIntegerExpansionError,
    NonLoopCycleError,
    NotPrehomogeneousError,
    NotRealSchurRootError,
    NoWhiteSinkError,
    OracleError,
    OrientedCycleError,
    PerpError,
    PreconditionError,
    PushPreconditionError,
    QuiverFileError,
    QuiverLssError,
    SummandCountMismatchError,
)
from quiver_lss._homext import (
    Decomposition,
    Term,
    cache_info,
    clear_cache,
    generic_decomposition,
    generic_ext,
    generic_hom,
    has_trivial_invariants,
    is_generic_subrep,
    is_schur_root,
)
from quiver_lss._linalg import expand_in_basis
from quiver_lss._lss import (
    GenericLssReport,
    LssDecomposition,
    Stratum,
    evaluate_weight,
    generic_lss_decomposition,
    is_almost_loopless,
    is_generic_lss,
    is_prehomogeneous,
    luna_strata,
    make_almost_loopless,
    preh_lss,
    push_left,
    push_right,
    semi_invariant_generators,
)
from quiver_lss._perp import (
    LocalQuiver,
    QuiverSchurReport,
    RootSequence,
    canonical_order,
    is_quiver_schur_sequence,
    left_perp_schur,
    left_perp_sequence,
    local_quiver,
    right_perp_schur,
    right_perp_sequence,
)
from quiver_lss._quiver import (
    DimVector,
    Quiver,
    RootClass,
    Weight,
    arrow_matrix,
    combine,
    euler_form,
    format_quiver,
    injective_dims,
    load_quiver,
    parse_dim_vector,
    parse_quiver,
    parse_root_sequence,
    projective_dims,
    root_class,
    tits_form,
    topological_order,
    unit_vector,
)

__version__ = "0.1.0"
__all__ = [
    "ArithmeticOverflowError",
    "ConfigError",
    "Decomposition",
    "DecompositionOrderError",
    "DimVector",
    "DimensionMismatchError",
    "ExpansionError",
    "GenericLssReport",
    "HomNotTrivialError",
    "LocalQuiver",
    "LocalQuiverError",
    "LssDecomposition",
    "LssStageError",
    "NegativeArrowCountError",
    "NegativeExpansionError",
    "NegativeExtError",
    "NoWhiteSinkError",
    "NonIntegerExpansionError",
    "NonLoopCycleError",
    "NotPrehomogeneousError",
    "NotRealSchurRootError",
    "OracleConfig",
    "OracleError",
    "OrientedCycleError",
    "PerpError",
    "PreconditionError",
    "PushPreconditionError",
    "Quiver",
    "QuiverFileError",
    "QuiverLssError",
    "QuiverSchurReport",
    "RootClass",
    "RootSequence",
    "Stratum",
    "SummandCountMismatchError",
    "Term",
    "Weight",
    "arrow_matrix",
    "cache_info",
    "canonical_order",
    "clear_cache",
    "combine",
    "euler_form",
    "evaluate_weight",
    "expand_in_basis",
    "format_quiver",
    "generic_decomposition",
    "generic_ext",
    "generic_hom",
    "generic_lss_decomposition",
    "has_trivial_invariants",
    "injective_dims",
    "is_almost_loopless",
    "is_generic_lss",
    "is_generic_subrep",
    "is_prehomogeneous",
    "is_quiver_schur_sequence",
    "is_schur_root",
    "left_perp_schur",
    "left_perp_sequence",
    "load_config",
    "load_quiver",
    "local_quiver",
    "luna_strata",
    "make_almost_loopless",
    "oracle",
    "parse_dim_vector",
    "parse_quiver",
    "parse_root_sequence",
    "preh_lss",
    "projective_dims",
    "push_left",
    "push_right",
    "right_perp_schur",
    "right_perp_sequence",
    "root_class",
    "semi_invariant_generators",
    "tits_form",
    "topological_order",
    "unit_vector",
]
