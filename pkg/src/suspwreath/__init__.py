"""One-point suspensions, reduced joins and wreath products of simplicial
complexes and polytopes, with checks of their combinatorial properties."""

from .complex import (
    FVector,
    SimplicialComplex,
    cone,
    deletion,
    euler_characteristic,
    f_vector,
    join,
    link,
    star,
)
from .constructions import (
    one_point_suspension,
    reduced_join,
    wreath_f_vector_formula,
    wreath_product,
)
from .isomorphism import find_isomorphism, is_isomorphic
from .verdict import PropertyVerdict

__version__ = "0.1.0"

__all__ = [
    "FVector",
    "PropertyVerdict",
    "SimplicialComplex",
    "cone",
    "deletion",
    "euler_characteristic",
    "f_vector",
    "find_isomorphism",
    "is_isomorphic",
    "join",
    "link",
    "one_point_suspension",
    "reduced_join",
    "star",
    "wreath_f_vector_formula",
    "wreath_product",
]
