"""Exact secant dimensions of Segre-Veronese varieties from fat-point ranks over F_p."""

from .combinat import (
    Multidegree,
    Shape,
    SizeCapError,
    VarietySpec,
    enumerate_monomials,
    expected_grassmann_dim,
    expected_secant_dim,
    multidegree_dimension,
)
from .config import RunConfig
from .fatpoints import FatPointScheme, PointTuple, conditions_matrix, hilbert_function, sample_scheme
from .modlinalg import FpMatrix, PrimeField, RankResult, rank
from .reduction import claim_basis, project_point, reduced_conditions_matrix, verify_reduction
from .secant import (
    GrassmannReport,
    MethodDisagreement,
    SecantReport,
    SplitCertificate,
    check_small_s_expected,
    classify_p1cubed,
    classify_p1xp1,
    defective_example_table,
    find_split_certificate,
    grassmann_secant_dimension,
    secant_dimension,
)
from .tensor import (
    PartialSymTensor,
    embed_point,
    flattening_rank,
    is_partially_symmetric,
    rank1_tensor,
)

__version__ = "0.1.0"
