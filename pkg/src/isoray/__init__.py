"""Exact-arithmetic classification of hyperbolic lattice isometries by
topological entropy."""

from .lattice import (
    ELLIPTIC,
    HYPERBOLIC,
    InternalInconsistencyError,
    Lattice,
    OTHER,
    PARABOLIC,
    QuotientData,
    Signature,
    bilinear,
    classify,
    classify_signature,
    complete_to_basis,
    gram_of,
    is_primitive,
    orthogonal_complement,
    primitivize,
    quotient_lattice,
    signature,
)
from .spectral import (
    EntropyValue,
    IntPolynomial,
    Isometry,
    char_poly,
    euler_phi,
    is_in_O_prime,
    is_isometry,
    is_null_entropy,
    is_unipotent,
    spectral_radius,
    trace_power_product,
    unipotency_exponent,
)
from .catalog import (
    CatalogEntry,
    direct_sum,
    eichler_transvection,
    hyperbolic_plane,
    is_even,
    k3_lattice,
    lookup,
    ns_rank20,
    pell_isometry,
    reflection,
    rescale,
    root_lattice,
)
from .groups import (
    AnalysisReport,
    CapExceededError,
    FiniteExponent,
    FixedPositiveVector,
    FixedRay,
    GeneratorSet,
    NonUnipotentPowerGroupError,
    NotNullEntropyError,
    PositiveEntropyWitness,
    Word,
    alpha_map,
    analyze_group,
    common_fixed_space,
    evaluate_word,
    fixed_ray,
    identity_isometry,
    image_group_closure,
    n0_membership,
    quotient_descend,
    triangularize_unipotent,
    verify_null_entropy_words,
)

__version__ = "0.1.0"
