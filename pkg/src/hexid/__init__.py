"""Identifying codes on the hexagonal grid: construction, exhaustive verification, exact density."""

from .code import CodeParams, codewords_in_window, in_c_dprime, in_c_prime, is_codeword, make_params
from .density import DensityAudit, audit, density_components, density_empirical, density_exact, density_theorem
from .lattice import (
    Line,
    Vertex,
    Window,
    ball,
    ball_row_segment,
    bfs_distance,
    distance,
    even_row_targets,
    l1_distance,
    line_distance,
    neighbors,
    odd_row_targets,
)
from .verifier import VerificationReport, check_claim9, check_nearby_uniqueness, identifying_set, verify

__version__ = "0.1.0"

__all__ = [
    "CodeParams",
    "DensityAudit",
    "Line",
    "VerificationReport",
    "Vertex",
    "Window",
    "audit",
    "ball",
    "ball_row_segment",
    "bfs_distance",
    "check_claim9",
    "check_nearby_uniqueness",
    "codewords_in_window",
    "density_components",
    "density_empirical",
    "density_exact",
    "density_theorem",
    "distance",
    "even_row_targets",
    "identifying_set",
    "in_c_dprime",
    "in_c_prime",
    "is_codeword",
    "l1_distance",
    "line_distance",
    "make_params",
    "neighbors",
    "odd_row_targets",
    "verify",
]
