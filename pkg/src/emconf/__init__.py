"""Conformal transformations of electromagnetic quantities, three ways.

The same dilations, translations, Lorentz maps, inversions, and special
conformal transformations are implemented in the sixteen-component spacetime
algebra, in the complex paravector algebra, and as plain tensor arithmetic.
The three routes are kept independent so each can check the others.
"""

from .cl13 import (
    BLADE_NAMES,
    DIM,
    Faraday13,
    FourVector,
    Multivector13,
    exp_bivector,
    geometric_product,
    grade_project,
    left_matrix,
    vector_sandwich,
    versor_inverse,
)
from .cl3 import (
    Faraday3,
    Paravector3,
    cl3_product,
    exp_complex_vector,
    minkowski_square,
    pure_vector,
    real_paravector,
    vector_triple,
)
from .conformal13 import (
    ConformalParams,
    CoordinateFrame,
    Dilation,
    Inversion,
    Lorentz,
    LorentzClass,
    QuantityKind,
    Sct,
    Translation,
    dilate,
    induced_matrix,
    invert_current,
    invert_faraday,
    invert_position,
    invert_potential,
    lorentz_apply,
    lorentz_generator,
    sct_current,
    sct_factor,
    sct_faraday,
    sct_position,
    sct_potential,
    translate,
)
from .conformal3 import (
    dilate3,
    induced_matrix3,
    inverse_position3,
    invert3_current,
    invert3_faraday,
    invert3_position,
    invert3_potential,
    lorentz3,
    parity3,
    scale_of,
    sct3_current,
    sct3_faraday,
    sct3_position,
    sct3_potential,
    sct_factor3,
    transform_faraday3,
    transform_position3,
    translate3,
)
from .bridge import (
    even_to_cl3,
    product_correspondence_check,
    sandwich_correspondence_check,
    to_faraday3,
    to_paravector,
    to_paravector_bar,
)
from .errors import (
    ConformalDomainError,
    DegenerateTimeDerivativeError,
    GradeLeakageError,
    ImaginaryResidueError,
    LightConeError,
    NonBivectorError,
    NonPositiveScaleError,
    NonRealEventError,
    OriginSingularityError,
    SctConeError,
    SingularVersorError,
)
from .fields import (
    Coulomb,
    FieldSpec,
    InvariantScalingReport,
    PlaneWave,
    UniformField,
    eval_field,
    invariant_scaling_report,
    invariants,
    predicted_invariant_factors,
)

__version__ = "0.1.0"

__all__ = [
    "BLADE_NAMES",
    "DIM",
    "Faraday13",
    "FourVector",
    "Multivector13",
    "exp_bivector",
    "geometric_product",
    "grade_project",
    "left_matrix",
    "vector_sandwich",
    "versor_inverse",
    "Faraday3",
    "Paravector3",
    "cl3_product",
    "exp_complex_vector",
    "minkowski_square",
    "pure_vector",
    "real_paravector",
    "vector_triple",
    "ConformalParams",
    "CoordinateFrame",
    "Dilation",
    "Inversion",
    "Lorentz",
    "LorentzClass",
    "QuantityKind",
    "Sct",
    "Translation",
    "dilate",
    "induced_matrix",
    "invert_current",
    "invert_faraday",
    "invert_position",
    "invert_potential",
    "lorentz_apply",
    "lorentz_generator",
    "sct_current",
    "sct_factor",
    "sct_faraday",
    "sct_position",
    "sct_potential",
    "translate",
    "dilate3",
    "induced_matrix3",
    "inverse_position3",
    "invert3_current",
    "invert3_faraday",
    "invert3_position",
    "invert3_potential",
    "lorentz3",
    "parity3",
    "scale_of",
    "sct3_current",
    "sct3_faraday",
    "sct3_position",
    "sct3_potential",
    "sct_factor3",
    "transform_faraday3",
    "transform_position3",
    "translate3",
    "even_to_cl3",
    "product_correspondence_check",
    "sandwich_correspondence_check",
    "to_faraday3",
    "to_paravector",
    "to_paravector_bar",
    "ConformalDomainError",
    "DegenerateTimeDerivativeError",
    "GradeLeakageError",
    "ImaginaryResidueError",
    "LightConeError",
    "NonBivectorError",
    "NonPositiveScaleError",
    "NonRealEventError",
    "OriginSingularityError",
    "SctConeError",
    "SingularVersorError",
    "Coulomb",
    "FieldSpec",
    "InvariantScalingReport",
    "PlaneWave",
    "UniformField",
    "eval_field",
    "invariant_scaling_report",
    "invariants",
    "predicted_invariant_factors",
]
