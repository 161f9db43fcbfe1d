"""The free Zinbiel superalgebra Zin(X)."""
from .components import (
    Multidegree,
    as_multidegree,
    bracket_monomials,
    bracket_span,
    component_of,
    kernel_basis,
    skew_rcom_basis,
)
from .expr import expand, format_expr, parse_expr
from . import rcom
from .products import (
    bar,
    is_tortkara_element,
    left_nested,
    p_map,
    shuffle_enumerated,
    super_anticommutator,
    super_commutator,
    super_shuffle,
    zinbiel_product,
)

__all__ = [
    "Multidegree",
    "as_multidegree",
    "bar",
    "bracket_monomials",
    "bracket_span",
    "component_of",
    "expand",
    "format_expr",
    "is_tortkara_element",
    "kernel_basis",
    "left_nested",
    "p_map",
    "parse_expr",
    "rcom",
    "shuffle_enumerated",
    "skew_rcom_basis",
    "super_anticommutator",
    "super_commutator",
    "super_shuffle",
    "zinbiel_product",
]
