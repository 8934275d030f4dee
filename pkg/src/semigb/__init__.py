"""Groebner bases of affine semi-regular sequences over prime fields.

Three engines (Buchberger, signature-based, Macaulay matrix), Hilbert series
of semi-regular shapes, graded Koszul homology, and executable checks of the
relations between a sequence, its homogenization and its top part.
"""

from .buchberger import (
    EngineOptions, GroebnerBasis, StepLog, buchberger, buchberger_hilbert_driven,
    dehomogenize_gb, h_seeded_buchberger, interreduce, is_d_groebner, is_groebner,
)
from .errors import SemigbError
from .f5 import f5_gb
from .gf import FieldElem, FieldSpec
from .koszul import (
    check_crypto_semiregular, check_d_regular, check_pardue_semiregular,
    first_fall_degree, h1_dimension,
)
from .macaulay import build_macaulay, complexity_estimate, macaulay_gb
from .polyring import (
    PolyRing, PolySequence, Polynomial, dehomogenize, homogenize, parse_polynomial,
    reduce, top_part,
)
from .series import degree_of_regularity, homogenized_prefix, semiregular_series

__version__ = "0.1.0"

__all__ = [
    "EngineOptions", "FieldElem", "FieldSpec", "GroebnerBasis", "PolyRing",
    "PolySequence", "Polynomial", "SemigbError", "StepLog", "buchberger",
    "buchberger_hilbert_driven", "build_macaulay", "check_crypto_semiregular",
    "check_d_regular", "check_pardue_semiregular", "complexity_estimate",
    "degree_of_regularity", "dehomogenize", "dehomogenize_gb", "f5_gb",
    "first_fall_degree", "h1_dimension", "h_seeded_buchberger", "homogenize",
    "homogenized_prefix", "interreduce", "is_d_groebner", "is_groebner",
    "macaulay_gb", "parse_polynomial", "reduce", "semiregular_series", "top_part",
]
