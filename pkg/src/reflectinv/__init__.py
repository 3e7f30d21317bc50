"""Exact invariants and equivariants of finite matrix groups over Q(i)."""

from .exactmath import (
    GaussianRational,
    QiMatrix,
    Rational,
    gauss_inverse,
    gauss_parse,
    gauss_print,
    kernel_basis,
    mat_det,
    mat_inverse,
    mat_mul,
    rref,
)
from .group import MatrixGroup, close, element_order
from .rep import (
    Character,
    Representation,
    char_inner,
    character,
    is_irreducible,
    rep_extend,
    tensor,
    trivial_representation,
)
from .poly import (
    Poly,
    PolyVec,
    act,
    act_vec,
    monomials_of_degree,
    normalize,
    variables,
)
from .molien import (
    HilbertData,
    TruncatedSeries,
    char_poly_reciprocal,
    molien_equivariant,
    molien_scalar,
    numerator_wrt,
    series_inverse,
)
from .equivar import (
    EquivariantSpace,
    ModuleGenerators,
    PrimaryInvariants,
    equivariant_basis,
    is_equivariant,
    module_generators,
    primary_invariants,
    reynolds,
    verify_free_resolution,
)
from .catalog import CatalogEntry, catalog_get, relation_table

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "QiMatrix",
    "Rational",
    "gauss_inverse",
    "gauss_parse",
    "gauss_print",
    "kernel_basis",
    "mat_det",
    "mat_inverse",
    "mat_mul",
    "rref",
    "MatrixGroup",
    "close",
    "element_order",
    "Character",
    "Representation",
    "char_inner",
    "character",
    "is_irreducible",
    "rep_extend",
    "tensor",
    "trivial_representation",
    "Poly",
    "PolyVec",
    "act",
    "act_vec",
    "monomials_of_degree",
    "normalize",
    "variables",
    "HilbertData",
    "TruncatedSeries",
    "char_poly_reciprocal",
    "molien_equivariant",
    "molien_scalar",
    "numerator_wrt",
    "series_inverse",
    "EquivariantSpace",
    "ModuleGenerators",
    "PrimaryInvariants",
    "equivariant_basis",
    "is_equivariant",
    "module_generators",
    "primary_invariants",
    "reynolds",
    "verify_free_resolution",
    "CatalogEntry",
    "catalog_get",
    "relation_table",
]
