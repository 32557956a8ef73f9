"""Quandle cocycle invariants of braid closures."""

from fractions import Fraction

from ._core import (
    Cochain,
    GroundRing,
    GroupRingElement,
    Quandle,
    QvError,
    ReferenceExample,
    basis_h2,
    basis_h3,
    check_yang_baxter,
    count_colorings,
    example110,
    example111,
    operator_invariant,
    residues,
    state_sum,
)
from ._core import expand as _expand


def expand(value, a, b, D=8):
    """Coefficients of hbar^0..hbar^D as exact fractions."""
    return [Fraction(c) for c in _expand(value, a, b, D)]


__all__ = [
    "Cochain",
    "GroundRing",
    "GroupRingElement",
    "Quandle",
    "QvError",
    "ReferenceExample",
    "basis_h2",
    "basis_h3",
    "check_yang_baxter",
    "count_colorings",
    "example110",
    "example111",
    "expand",
    "operator_invariant",
    "residues",
    "state_sum",
]
