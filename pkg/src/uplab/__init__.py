"""Exact computation with plane point configurations and space curves.

The package computes Hilbert functions and their difference landmarks,
checks the uniform position property with re-checkable witnesses, builds
minimal linear systems and tests their members for absolute
irreducibility, and verifies end to end that the generic minimal-degree
curve through a plane section of an explicit space curve is irreducible,
including over finite fields where uniform position fails.

All arithmetic is exact: prime fields, their extensions, and
arbitrary-precision rationals.  Every randomized routine takes an explicit
seed and reproduces byte-identical results.
"""

from .errors import (
    BudgetExceeded,
    CompositeCharacteristic,
    CurveInPlane,
    DegreeZero,
    DependentSample,
    EmptyConfiguration,
    EmptySystem,
    FieldMismatch,
    GenericityExhausted,
    IncompleteSection,
    InconsistentInput,
    InvalidParameters,
    NoEmbedding,
    NotASubset,
    PointOffPlane,
    RationalField,
    SubstitutionExhausted,
    UplabError,
    ZeroPolynomial,
)
from .fields import FieldElement, FieldSpec, embed, frobenius, is_prime, make_extension
from .unipoly import (
    UniPoly,
    factor_univariate,
    is_irreducible,
    poly_gcd,
    poly_xgcd,
    roots_in_extension,
    roots_in_field,
    squarefree_decomposition,
)
from .linalg import ExactMatrix, kernel_basis, rank
from .geometry import (
    ParamCurve,
    Plane,
    PointConfiguration,
    ProjPoint,
    SectionResult,
    collinear,
    coordinatize_on_plane,
    lift_to_plane,
    plane_section,
    random_plane,
    section_polynomial,
)
from .hilbert import (
    HilbertProfile,
    MinimalSystemVerdict,
    classify_minimal_system,
    h0_ideal,
    h1_ideal,
    hilbert_value,
    is_decreasing_type,
    profile,
    ternary_monomials,
    truncation_predict,
)
from .upp import (
    ContainmentReport,
    UppReport,
    UppWitness,
    collinear_triples,
    containment_check,
    upp_check,
)
from .curves import (
    Bivariate,
    LinearSystem,
    TernaryForm,
    bivar_gcd,
    factor_bivariate,
    gcd_of_system,
    is_absolutely_irreducible,
    line_divides,
    linear_system,
    minimal_degree,
    random_member,
    ternary_divides,
)
from .harness import (
    TrialRecord,
    TrialReport,
    collinear_control_config,
    derive_seed,
    frobenius_curve,
    frobenius_pipeline,
    frobenius_section_direct,
    twisted_cubic,
    verify_decreasing_type,
    verify_minimal_irreducibility,
)

__version__ = "0.1.0"
