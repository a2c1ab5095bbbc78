"""Exact geometric (Clifford) algebra over the rationals."""

from fractions import Fraction

from ._cliffq import (
    Algebra,
    CliffordError,
    Multivector,
    NotInvertible,
    ParseError,
    preset_names,
    run_cli,
)

__all__ = [
    "Algebra",
    "CliffordError",
    "Multivector",
    "NotInvertible",
    "ParseError",
    "coefficients",
    "preset_names",
    "run_cli",
]


def coefficients(mv):
    """Map blade label -> Fraction, in canonical blade order."""
    return {label: Fraction(c) for label, c in mv.terms()}
