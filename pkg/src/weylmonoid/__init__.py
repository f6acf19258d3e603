"""Exact combinatorics of the Weyl monoid of a symmetrizable Kac-Moody algebra."""

from .coxeter import RootVector, WeylElem, WeylGroup, weyl_group
from .gcm import GCM, reference, validate
from .monoid import MonoidElem, from_parts, inverse, multiply, unit
from .titscone import ConePoint, Face, Facet

__all__ = [
    "GCM", "validate", "reference",
    "WeylGroup", "WeylElem", "RootVector", "weyl_group",
    "MonoidElem", "from_parts", "multiply", "inverse", "unit",
    "ConePoint", "Face", "Facet",
]
