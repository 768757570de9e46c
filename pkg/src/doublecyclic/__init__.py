"""Binary two-block cyclic codes: construction, duality, brute-force checks."""

from .codes import (
    BinaryMatrix,
    CodeParams,
    Codeword,
    CompatibilityViolation,
    DoubleCyclicCode,
    GeneratorTriple,
    InternalConsistencyError,
    NotADivisorLeft,
    NotADivisorRight,
    SubcodeCardinalities,
    UnsupportedDegenerateLength,
    ValidationError,
    encode,
    generator_matrix,
    is_separable,
    normalize,
    project_left,
    project_right,
    shift,
    spanning_set,
    standard_form,
    subcode_cardinalities,
    validate,
)
from .duality import (
    DualTriple,
    circle_product,
    dual_abar,
    dual_bbar,
    dual_code,
    dual_lambda,
    dual_triple,
    orthogonal_to_all_shifts,
    right_annihilator_generator,
)
from .gf2poly import (
    NEG_INF,
    Gf2Poly,
    Gf2PolyParseError,
    NotInvertibleError,
    egcd,
    format_poly,
    gcd,
    modinv,
    parse,
    theta,
    x_to,
    xn_minus_one,
)
from .oracle import CapExceededError, CodewordSet

__version__ = "0.1.0"
