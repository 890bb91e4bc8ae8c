"""Divisor braid groups on closed oriented surfaces, computed exactly."""

from .scheme import (
    NegativeColourScheme,
    analyze_graph,
    disjoint_union,
    edge_scheme,
    negate_graph,
    validate_scheme,
)
from .zlinalg import FgAbGroup, cokernel, hnf, kernel_mod, snf

__all__ = [
    "FgAbGroup",
    "NegativeColourScheme",
    "analyze_graph",
    "cokernel",
    "disjoint_union",
    "edge_scheme",
    "hnf",
    "kernel_mod",
    "negate_graph",
    "snf",
    "validate_scheme",
]
