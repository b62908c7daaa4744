"""Finite subtraction Menger algebras: axiom checks, partial function algebras
and representations by partial n-place functions."""

from ._menger import (
    Algebra,
    CheckReport,
    ClosureCapExceeded,
    MengerError,
    ParseError,
    Representation,
    VerificationFailed,
    Witness,
    all_partial_functions,
    check_all,
    check_compat_axioms,
    check_derived_identities,
    check_subtraction_axioms,
    check_superassociativity,
    close,
    concretize,
    random_closed_algebra,
    represent,
    translations,
    verify_representation,
)

__all__ = [
    "Algebra",
    "CheckReport",
    "ClosureCapExceeded",
    "MengerError",
    "ParseError",
    "Representation",
    "VerificationFailed",
    "Witness",
    "all_partial_functions",
    "check_all",
    "check_compat_axioms",
    "check_derived_identities",
    "check_subtraction_axioms",
    "check_superassociativity",
    "close",
    "concretize",
    "random_closed_algebra",
    "represent",
    "translations",
    "verify_representation",
]
