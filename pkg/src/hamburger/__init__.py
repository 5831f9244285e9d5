"""Exact hamburger-matrix determinants, cycle systems and Aztec-region tilings."""
from .graph import (
    Dag, GeneralizedHamburgerGraph, HamburgerGraph, build_matrix, hamburger_det, reduced_det, validate,
)
from .linalg import Matrix, det
from .regions import PillowSpec, aztec_diamond, build_digraph, generalized_pillow, q_pillow
from .tilings import count_tilings

__version__ = "0.1.0"

__all__ = [
    "Dag", "GeneralizedHamburgerGraph", "HamburgerGraph", "Matrix", "PillowSpec", "aztec_diamond",
    "build_digraph", "build_matrix", "count_tilings", "det", "generalized_pillow", "hamburger_det",
    "q_pillow", "reduced_det", "validate",
]
