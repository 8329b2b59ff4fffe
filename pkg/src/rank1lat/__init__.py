"""Exact shortest vectors and reduced bases of rank-1 modular lattices (dimensions 2-5)."""
from .core import ExactVector, LatticeBasis, canonical_sign, mod_inverse, sym_residue
from .exceptions import LatticeError
from .kernels import BACKEND
from .modlat import GeneratorSpec, build_basis, build_point_set, pointset_min_distance, project_2d
from .svp import minkowski_reduce, normalized_length, shortest_vector, svp_oracle

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExactVector",
    "GeneratorSpec",
    "LatticeBasis",
    "LatticeError",
    "build_basis",
    "build_point_set",
    "canonical_sign",
    "minkowski_reduce",
    "mod_inverse",
    "normalized_length",
    "pointset_min_distance",
    "project_2d",
    "shortest_vector",
    "svp_oracle",
    "sym_residue",
]
