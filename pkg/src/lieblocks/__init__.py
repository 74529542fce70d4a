"""Exact Lie-theoretic computations around conformal blocks.

Root systems and characters of simple Lie algebras, Dynkin indices of
representations, pfaffians of skew complexes, Picard groups of moduli of
quasi-parabolic bundles, and Verlinde dimensions.
"""
from .algebra import SimpleLieAlgebra, alcove, build_algebra, inner, weyl_orbit
from .characters import FormalCharacter, dominant_character, tensor_character, weyl_dimension
from .dynkin import (dynkin_index, e8_fundamental_table, index_casimir, index_character_sum,
                     minimal_index)
from .errors import LieBlocksError
from .parabolic import (ParabolicType, line_bundle_coords, parabolic_from_weight,
                        picard_of_parabolic_moduli)
from .pfaffian import SkewComplex, SkewComplexMorphism, SkewMatrix, pfaffian, pfaffian_of_morphism
from .verlinde import VerlindeQuery, lattice_indices, verlinde_dimension

__version__ = "0.1.0"

__all__ = [
    "FormalCharacter", "LieBlocksError", "ParabolicType", "SimpleLieAlgebra", "SkewComplex",
    "SkewComplexMorphism", "SkewMatrix", "VerlindeQuery", "alcove", "build_algebra",
    "dominant_character", "dynkin_index", "e8_fundamental_table", "index_casimir",
    "index_character_sum", "inner", "lattice_indices", "line_bundle_coords", "minimal_index",
    "parabolic_from_weight", "pfaffian", "pfaffian_of_morphism", "picard_of_parabolic_moduli",
    "tensor_character", "verlinde_dimension", "weyl_dimension", "weyl_orbit",
]
