"""Exact dynamics of a one-parameter family of affine interval exchanges
and the directional foliations of the genus-two surface they suspend."""
from .aiet import Aiet, Branch, base_map, detect_periodic, family_member, first_return, rotation
from .classify import Caps, Classification, Tag, classify_direction, classify_parameter_t
from .exactnum import INF, Mat2, MatrixType, classify_matrix, mat_act, mat_mul
from .rauzy import run as run_induction
from .schottky import GroupWord, limit_set_approx, reduce_to_fundamental, veech_checks

__all__ = [
    "Aiet", "Branch", "Caps", "Classification", "GroupWord", "INF", "Mat2", "MatrixType",
    "Tag", "base_map", "classify_direction", "classify_matrix", "classify_parameter_t",
    "detect_periodic", "family_member", "first_return", "limit_set_approx", "mat_act",
    "mat_mul", "reduce_to_fundamental", "rotation", "run_induction", "veech_checks",
]
