"""Finite-dimensional superalgebras given by structure constants."""
from .algebra import SuperAlgebra, from_products, load_algebra, read_algebra, vadd, vec, vfmt, zero_algebra
from .catalog import (
    SAMPLES,
    CatalogEntry,
    CatalogReport,
    build,
    catalog,
    export_catalog,
    lookup,
    verify_catalog,
    with_flags,
)
from .grassmann import GrassmannTruncation, disjoint_tuples, grassmann_envelope, verify_envelope
from .identities import IdentityKind, IdentityVerdict, evaluate_on_elements, residual, verify_identity
from .isomorphism import are_isomorphic, expected_isomorphic, family_isomorphism_check

__all__ = [
    "SAMPLES",
    "CatalogEntry",
    "CatalogReport",
    "GrassmannTruncation",
    "IdentityKind",
    "IdentityVerdict",
    "SuperAlgebra",
    "are_isomorphic",
    "build",
    "catalog",
    "disjoint_tuples",
    "evaluate_on_elements",
    "expected_isomorphic",
    "export_catalog",
    "family_isomorphism_check",
    "from_products",
    "grassmann_envelope",
    "load_algebra",
    "lookup",
    "read_algebra",
    "residual",
    "vadd",
    "vec",
    "verify_catalog",
    "verify_envelope",
    "verify_identity",
    "vfmt",
    "with_flags",
    "zero_algebra",
]
