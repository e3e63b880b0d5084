"""Exact verification of mod-2 cocircuit counting identities.

Computes both sides of the parity identity between the top
characteristic number of a free Z2-pseudomanifold and the count of
facets labelled by cocircuits of a uniform oriented matroid, entirely
in exact arithmetic, together with the cochain-representative check on
the crosspolytope boundary.
"""

from .signvectors import (
    CrossPolytopeFace,
    SignVector,
    canonical_orbit_representative,
    face_from_signvector,
    is_orthogonal,
    negate,
    signvector_from_face,
    support,
)
from .matroids import (
    AxiomVerdict,
    Chirotope,
    OrientedMatroid,
    RationalMatrix,
    alternating_dual,
    alternating_matroid,
    check_cocircuit_axioms,
    chirotope_from_matrix,
    circuits_from_chirotope,
    cocircuits_from_chirotope,
    dual,
    is_uniform,
    moment_curve_matrix,
    oracle_cocircuits,
    subspace_face_oracle,
)
from .complexes import (
    InvalidComplexError,
    Labelling,
    LabellingInadmissibleError,
    QuotientComplex,
    QuotientNotSimplicialError,
    Z2Complex,
    argmax_labelling,
    barycentric_subdivide,
    crosspolytope_boundary,
    generate_sphere_labelling,
    lambda_image,
    quotient,
    random_admissible_labelling,
    torus_fixture,
    validate_labelling,
    validate_z2_manifold,
)
from .homology import (
    FundamentalClass,
    GF2Cochain,
    coboundary,
    coboundary_matrix,
    coboundary_witness,
    cup_power,
    fundamental_class,
    is_coboundary,
    is_cocycle,
    pair,
    sw_number,
    w1_cocycle,
)
from .verify import (
    AlphaTable,
    FuzzConfig,
    KyFanReport,
    ParityReport,
    RepresentativeReport,
    alpha_counts,
    build_cochain_representative,
    fuzz_campaign,
    kyfan_classical,
    parity_check,
    verify_representative,
)

__version__ = "0.1.0"
