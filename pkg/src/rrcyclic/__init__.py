"""Cyclic codes with good parameters from the van Lint (u | u+v) combination.

Finite fields and polynomials over GF(2^s), cyclotomic cosets, cyclic and BCH
codes, minimum-distance engines, classical bounds, the combined-code
construction and its parametric families, and the reproduced parameter table.
"""

from .errors import (
    FieldMismatchError,
    InternalConsistencyError,
    InvalidGeneratorError,
    InvalidLengthError,
    InvalidParametersError,
    NotApplicableError,
    ResourceError,
    RRCyclicError,
    UnsupportedFieldError,
)
from .gf import Field, FieldElem, ext_field, field_create, field_for_order
from .poly import Poly, poly_gcd, poly_lcm
from .code import CyclicCode, LinearCode, bch_code, cyclic_from_generator

__all__ = [
    "CyclicCode", "Field", "FieldElem", "FieldMismatchError", "InternalConsistencyError", "InvalidGeneratorError",
    "InvalidLengthError", "InvalidParametersError", "LinearCode", "NotApplicableError", "Poly", "RRCyclicError",
    "ResourceError", "UnsupportedFieldError", "bch_code", "cyclic_from_generator", "ext_field", "field_create",
    "field_for_order", "poly_gcd", "poly_lcm",
]

__version__ = "0.1.0"
