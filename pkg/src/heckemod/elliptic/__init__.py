"""The curve y^2 + y = x^3 + x + 1 over F_2, its characters, and one Hall bracket."""

from .bracket import AtiyahLabel, AtiyahSum, LinComb, assemble_bracket, multiplicity_extraction
from .characters import PicardGroup, base_change, character_table, orthogonality_matrix
from .curve import CURVE, ClosedPointE, closed_point, closed_points_elliptic, count_points

__all__ = [
    "CURVE",
    "AtiyahLabel",
    "AtiyahSum",
    "ClosedPointE",
    "LinComb",
    "PicardGroup",
    "assemble_bracket",
    "base_change",
    "character_table",
    "closed_point",
    "closed_points_elliptic",
    "count_points",
    "multiplicity_extraction",
    "orthogonality_matrix",
]
