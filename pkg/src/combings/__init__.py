"""Exact-arithmetic homotopy invariants of combings of 3-manifolds
presented by integral surgery.

Linking matrices in, exact rationals out: first homology and the torsion
linking form, the Gompf invariant / p_1 of combings with its gamma action
and Spin^c classification, image and parity theorems, the framed-cobordism
calculus of the Pontrjagin construction, and the Theta = 6*lambda + p_1/4
combiner.
"""

from .combing import (
    DEFAULT_BOX,
    CombingSpec,
    EulerClassInfo,
    P1ImageReport,
    P1Value,
    ReparamDelta,
    apply_modification,
    combing_equal,
    euler_class,
    gamma,
    gamma_orbit_modulus,
    hf_grading,
    p1,
    p1_image,
    parity_check,
    reference_parallelization,
    reparam_delta,
    spin_c_equal,
    stabilize,
    theta_g,
    validate_combing,
)
from .errors import (
    BadEtaError,
    CapExceededError,
    DimensionMismatchError,
    DomainError,
    EvenCoefficientError,
    MissingClassesError,
    NonTorsionError,
    NotCharacteristicError,
    NotZSphereError,
    ParseError,
)
from .framed import (
    FramedCobordismClass,
    FramedLinkData,
    add_hopf,
    band_sum,
    cobordism_class,
    framed_cobordant_zsphere,
    pontrjagin_p1,
    total_self_linking,
)
from .linalg import (
    IntMatrix,
    RationalSolve,
    SignatureTriple,
    SnfResult,
    det,
    kernel_basis,
    signature,
    smith_normal_form,
    solve_integer,
    solve_rational,
)
from .surgery import (
    DEFAULT_CAP,
    EMPTY_PRESENTATION,
    HomologySummary,
    ModClass,
    SurgeryPresentation,
    classes_equal,
    enumerate_torsion,
    homology_summary,
    is_torsion_class,
    linking_form,
    meridian_pairing,
    reduce_class,
)
from .theta import ThetaInput, theta_invariant, theta_variation

__version__ = "0.1.0"

__all__ = [
    "BadEtaError",
    "CapExceededError",
    "CombingSpec",
    "DEFAULT_BOX",
    "DEFAULT_CAP",
    "DimensionMismatchError",
    "DomainError",
    "EMPTY_PRESENTATION",
    "EulerClassInfo",
    "EvenCoefficientError",
    "FramedCobordismClass",
    "FramedLinkData",
    "HomologySummary",
    "IntMatrix",
    "MissingClassesError",
    "ModClass",
    "NonTorsionError",
    "NotCharacteristicError",
    "NotZSphereError",
    "P1ImageReport",
    "P1Value",
    "ParseError",
    "RationalSolve",
    "ReparamDelta",
    "SignatureTriple",
    "SnfResult",
    "SurgeryPresentation",
    "ThetaInput",
    "add_hopf",
    "apply_modification",
    "band_sum",
    "classes_equal",
    "cobordism_class",
    "combing_equal",
    "det",
    "enumerate_torsion",
    "euler_class",
    "framed_cobordant_zsphere",
    "gamma",
    "gamma_orbit_modulus",
    "hf_grading",
    "homology_summary",
    "is_torsion_class",
    "kernel_basis",
    "linking_form",
    "meridian_pairing",
    "p1",
    "p1_image",
    "parity_check",
    "pontrjagin_p1",
    "reduce_class",
    "reference_parallelization",
    "reparam_delta",
    "signature",
    "smith_normal_form",
    "solve_integer",
    "solve_rational",
    "spin_c_equal",
    "stabilize",
    "theta_g",
    "theta_invariant",
    "theta_variation",
    "total_self_linking",
    "validate_combing",
]
