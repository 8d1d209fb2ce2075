"""Exact Alexander polynomials of twisted torus knots T(p, q, 2, r), with
the lens-space surgery obstruction, Morton coefficient bounds, and the
torus-knot primitivity criterion."""

from .laurent import EmptyPolynomial, LaurentPoly, NotDivisible, format_poly, parse_poly
from .braid import (
    BraidWord,
    InvalidTorusParameters,
    TwistedTorusKnot,
    braid_from_text,
    braid_to_text,
    closure_components,
    compose,
    dean_braid,
    family_km,
    is_msy_family,
    permutation,
)
from .alexander import (
    AlexanderPolynomial,
    BurauMatrix,
    NotAKnot,
    NotAlexanderLike,
    alexander_from_braid,
    alexander_of_knot,
    alexander_torus_closed_form,
    bareiss_determinant,
    normalize,
    reduced_burau,
)
from .obstructions import (
    HypothesisNotMet,
    MortonReport,
    NoInverse,
    ObstructionReport,
    gamma_primitivity_verdict,
    morton_check,
    morton_inverse_s,
    os_lens_form_check,
)
from .primitivity import PrimitivityResult, middle_splitting_primitive
from .cli import ScanRow, scan_rows

__version__ = "0.1.0"

__all__ = [
    "AlexanderPolynomial",
    "BraidWord",
    "BurauMatrix",
    "EmptyPolynomial",
    "HypothesisNotMet",
    "InvalidTorusParameters",
    "LaurentPoly",
    "MortonReport",
    "NoInverse",
    "NotAKnot",
    "NotAlexanderLike",
    "NotDivisible",
    "ObstructionReport",
    "PrimitivityResult",
    "ScanRow",
    "TwistedTorusKnot",
    "alexander_from_braid",
    "alexander_of_knot",
    "alexander_torus_closed_form",
    "bareiss_determinant",
    "braid_from_text",
    "braid_to_text",
    "closure_components",
    "compose",
    "dean_braid",
    "family_km",
    "format_poly",
    "gamma_primitivity_verdict",
    "is_msy_family",
    "middle_splitting_primitive",
    "morton_check",
    "morton_inverse_s",
    "normalize",
    "os_lens_form_check",
    "parse_poly",
    "permutation",
    "reduced_burau",
    "scan_rows",
]
