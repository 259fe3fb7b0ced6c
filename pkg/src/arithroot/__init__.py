"""Arithmetic root systems and Weyl groupoids of diagonal braidings."""

from .values import GroupValue, is_primitive_root, value_order
from .bicharacter import BraidingMatrix, chi_eval, cartan_entry, matrix_at_basis, twist_equivalent
from .groupoid import generate, reflect, roots_of, positive_split
from .rank2 import figure1_classify, lemma_no1_filter, rank2_chain, sl2_order_finite, subslz_certificate
from .equivalence import weyl_equivalent, weyl_orbit
from .dimension import nichols_dimension, pbw_height

__all__ = [
    "GroupValue", "is_primitive_root", "value_order",
    "BraidingMatrix", "chi_eval", "cartan_entry", "matrix_at_basis", "twist_equivalent",
    "generate", "reflect", "roots_of", "positive_split",
    "figure1_classify", "lemma_no1_filter", "rank2_chain", "sl2_order_finite", "subslz_certificate",
    "weyl_equivalent", "weyl_orbit",
    "nichols_dimension", "pbw_height",
]
