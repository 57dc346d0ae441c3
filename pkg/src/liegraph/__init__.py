"""Labeled directed graphs of Lie algebras over Q(sqrt d)."""

from .admissibility import check_admissible, eigen_basis_search, nilpotent_closure_basis
from .algebra import LieAlgebra, bracket, verify_lie
from .exact import Scalar, Subspace
from .graph import LieGraph, build_graph

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra",
    "LieGraph",
    "Scalar",
    "Subspace",
    "bracket",
    "build_graph",
    "check_admissible",
    "eigen_basis_search",
    "nilpotent_closure_basis",
    "verify_lie",
]
