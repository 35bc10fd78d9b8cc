"""Groebner bases, Hilbert series and tangent cones over Q."""
from ._kernel import IMPLEMENTATION
from .buchberger import IdealBasis, groebner_basis, ideal_contains, reduce_poly
from .hilbert import dim_degree, hilbert_data, resolution_hilbert_check
from .ideal_file import load_ideal_file, parse_ideal_text
from .polynomial import GREVLEX, GRLEX, LEX, MonomialOrder, ParseError, Polynomial, parse_polynomial
from .tangent import linear_support, tangent_cone

__all__ = [
    "IMPLEMENTATION", "IdealBasis", "groebner_basis", "ideal_contains", "reduce_poly",
    "dim_degree", "hilbert_data", "resolution_hilbert_check", "load_ideal_file",
    "parse_ideal_text", "GREVLEX", "GRLEX", "LEX", "MonomialOrder", "ParseError",
    "Polynomial", "parse_polynomial", "linear_support", "tangent_cone",
]
