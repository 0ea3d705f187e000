"""Exact constructions of pointed Hopf algebras from diagonal braiding data."""

from .cyclotomic import Cyclotomic, arith, embed, order, qbinomial

__all__ = [
    "Cyclotomic",
    "arith",
    "embed",
    "order",
    "qbinomial",
]
