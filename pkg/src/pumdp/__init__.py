"""Partial unit-memory MDP convolutional codes over finite field towers.

Exact arithmetic in F_p < F_q < F_{q^d}, a Cauchy-based construction, MDP
verification by minor enumeration, existence bounds and encoder accounting.
"""

from __future__ import annotations

from .bounds import BoundReport, bound_report, homogeneity_check, minor_product_eval
from .codes import ConvCode, cauchy_matrix, compute_degree, fixed_degree_construct, sliding_matrix, cauchy_construct
from .encoder import CodewordStream, MessageStream, OpCountReport, asymptotic_note, count_report, encode
from .errors import CapacityError, FieldError, FormatError, ParameterError, PumdpError, UsageError
from .gf import Fe, FieldTower, Level, Poly, counting_mults, tower_create, tower_for_q
from .kernels import BACKEND
from .matrix import FieldMatrix, det, is_mds_matrix, is_superregular, rank
from .mdp import MdpVerdict, column_distance_bruteforce, free_distance_check, is_mdp

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundReport", "CapacityError", "CodewordStream", "ConvCode", "Fe", "FieldError",
    "FieldMatrix", "FieldTower", "FormatError", "Level", "MdpVerdict", "MessageStream", "OpCountReport",
    "ParameterError", "Poly", "PumdpError", "UsageError", "asymptotic_note", "bound_report",
    "cauchy_matrix", "column_distance_bruteforce", "compute_degree", "fixed_degree_construct",
    "count_report", "counting_mults", "det", "encode", "free_distance_check", "homogeneity_check",
    "is_mdp", "is_mds_matrix", "is_superregular", "minor_product_eval", "rank", "sliding_matrix",
    "cauchy_construct", "tower_create", "tower_for_q",
]
