"""Exact delta-vectors (h*-vectors) of lattice simplices and their dilations.

The package computes delta vectors by enumerating the integer points of the
fundamental half-open parallelepiped (through a Smith normal form), applies
the dilation operator to series numerators by two independent routes, tests
unimodality, log-concavity, and the alternating-increase property with exact
witnesses, builds the explicit counterexample families, and verifies the
dilation bounds max(s, d+1-s) with certificate decompositions.  Everything
runs in exact integer and rational arithmetic.
"""

from .errors import (
    AffinelyDependent,
    AllZeroSequence,
    BadParams,
    BoxCapExceeded,
    CertificateMismatch,
    DeltaVecError,
    DilationBoundViolated,
    InconsistentCounts,
    MixedDimensions,
    NoClosedForm,
    NonPositiveDilation,
    PreconditionViolated,
    VolumeCapExceeded,
)
from .sequences import (
    Property,
    PropertyVerdict,
    check_hibi,
    check_stanley,
    delta_degree,
    is_alternatingly_increasing,
    is_log_concave,
    is_unimodal,
    spread_product_holds,
)
from .series import (
    HPolynomial,
    RepunitPower,
    binom_poly,
    dilate_h,
    dilate_h_interpolated,
    g_eval,
    invert_counting_series,
    repunit_power,
)
from .simplex import (
    BasicFactsReport,
    BoxPoint,
    DeltaVector,
    LatticeSimplex,
    basic_facts_check,
    delta_vector,
    dilate,
    ehrhart_eval,
    enumerate_box_points,
    interior_count,
    min_interior_dilation,
    new_simplex,
    normalized_volume,
)
from .snf import SnfDecomposition, smith_normal_form
from .bruteforce import (
    CountTable,
    ReciprocityReport,
    brute_count,
    count_table,
    delta_from_counts,
    reciprocity_check,
)
from .families import (
    Family,
    FamilySpec,
    RouteCheck,
    build_simplex,
    ceiling_histogram,
    closed_form_delta,
    nonunimodal_bounds,
    observed_properties,
    predicted_properties,
    three_route_check,
)
from .verification import (
    ChainCertificate,
    DilationHypotheses,
    SweepReport,
    SweepRow,
    certify_chain_a,
    certify_chain_b,
    check_dilation_hypotheses,
    dilation_bounds,
    sweep,
)

__version__ = "0.1.0"
