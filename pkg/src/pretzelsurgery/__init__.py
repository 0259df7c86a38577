"""Exact Alexander polynomials of pretzel knots and the classification of
cyclic/finite Dehn surgeries on Montesinos knots."""

from .laurent import LaurentPoly, SKEIN_FACTOR, f_poly, parse, render
from .pretzel import (
    FamilyKind,
    FamilyTag,
    MontesinosDescription,
    PretzelLink,
    canonicalize,
    component_count,
    family_membership,
    is_knot,
    parse_montesinos,
    parse_pretzel,
)
from .alexander import (
    SkeinTrace,
    UnsupportedLinkError,
    alexander_skein,
    alexander_with_trace,
    claim_formula,
    supports,
    torus_link_alexander,
)
from .oracle import WirtingerPresentation, alexander_fox, build_diagram

from .obstruction import (
    CheckResult,
    GabaiCaseTrace,
    HFRankParams,
    ObstructionError,
    OSFormDecomposition,
    SurgerySlope,
    claim2_implication,
    gabai_not_fibered,
    hf_rank,
    monic_check,
    os_form_check,
    os_form_polynomial,
    pm1_coefficients,
    symmetrize,
)
from .classify import (
    ClassificationReport,
    ClassifyError,
    FinalVerdict,
    Hyperbolicity,
    HyperbolicityResult,
    StageResult,
    alexander_gate,
    classify,
    delman_gate,
    hyperbolicity_status,
    mattman_gate,
)

__version__ = "0.1.0"
