"""Symplectic codes over prime fields: parameters, anticode invariants, enumerators."""

import json

from ._core import (
    BudgetExceeded,
    Code,
    CommutationViolation,
    DimensionMismatch,
    Error,
    InvalidArgument,
    ParseError,
    alpha,
    beta,
    binomial_moments,
    enumerators,
    fixture,
    generalized_weights,
    params,
    profiles,
    puncture,
    shorten,
    stabilizer_code,
    subsystem_code,
    verify_json,
    weight_distribution,
)


def verify(suite="all", seed=7, random_codes=8):
    """Run an identity suite on the fixtures and seeded random codes."""
    return json.loads(verify_json(suite, seed, random_codes))


__all__ = [
    "BudgetExceeded",
    "Code",
    "CommutationViolation",
    "DimensionMismatch",
    "Error",
    "InvalidArgument",
    "ParseError",
    "alpha",
    "beta",
    "binomial_moments",
    "enumerators",
    "fixture",
    "generalized_weights",
    "params",
    "profiles",
    "puncture",
    "shorten",
    "stabilizer_code",
    "subsystem_code",
    "verify",
    "weight_distribution",
]
