"""Exact computations with nilpotent Novikov algebras and their central extensions."""

from .algebra import (
    Algebra,
    GeneratorWords,
    IdentityViolation,
    annihilator,
    check_novikov,
    fingerprint,
    is_one_generated,
    multiply,
    power_chain,
)
from .dsl import format_algebra, parse_algebra, parse_form
from .linalg import Matrix, Subspace, nullspace, quotient_representatives, rref, subspaces_equal

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "GeneratorWords",
    "IdentityViolation",
    "Matrix",
    "Subspace",
    "annihilator",
    "check_novikov",
    "fingerprint",
    "format_algebra",
    "is_one_generated",
    "multiply",
    "nullspace",
    "parse_algebra",
    "parse_form",
    "power_chain",
    "quotient_representatives",
    "rref",
    "subspaces_equal",
]
