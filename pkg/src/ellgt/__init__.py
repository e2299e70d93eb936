"""Numerical toolkit for level-0 tensor modules of the elliptic quantum
group of gl_N type: special functions, the dynamical R-matrix, L-operator
words, quantum minors, Gelfand-Tsetlin bases and elliptic weight
functions, plus a verification CLI.
"""
from ._kernels import BACKEND
from .basis import PartitionI, TensorVector
from .errors import (DegenerateParametersError, DomainError, EllgtError,
                     EnumerationLimitError, PoleError)
from .rmatrix import (DynExponents, RMatrix, check_dybe, check_unitarity,
                      rbar_matrix, rtilde_matrix, stilde_apply)
from .special import (EllipticParams, elliptic_gamma, q_pochhammer, rho_plus,
                      theta_big, theta_small)
from .tensor import (Lattice, LWord, WordScalar, apply_lword, l_entry_matrix,
                     partition_z)
from .minors import (MinorSpec, apply_A, apply_B, apply_C, apply_minor,
                     sgn_star, sgn_star_exchange)
from .gt import (DynWeight, GTPattern, build_xi_minor, build_xi_prime,
                 build_xi_tilde, eigenvalue_a, gl2_evaluation_weights,
                 gl2_suite, normalization_n, xtilde_diagonal)
from .weights import (TriangularVars, change_of_basis, u_tilde,
                      verify_partition_identity, w_tilde)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "PartitionI", "TensorVector", "DynExponents", "RMatrix",
    "EllipticParams", "Lattice", "LWord", "WordScalar", "DynWeight",
    "GTPattern", "TriangularVars",
    "q_pochhammer", "theta_big", "theta_small", "elliptic_gamma", "rho_plus",
    "rbar_matrix", "rtilde_matrix", "check_dybe", "check_unitarity",
    "stilde_apply", "l_entry_matrix", "apply_lword", "partition_z",
    "MinorSpec", "sgn_star", "sgn_star_exchange", "apply_minor",
    "apply_A", "apply_B", "apply_C",
    "build_xi_tilde", "build_xi_minor", "build_xi_prime", "eigenvalue_a",
    "normalization_n", "xtilde_diagonal", "gl2_suite",
    "gl2_evaluation_weights", "u_tilde", "w_tilde", "change_of_basis",
    "verify_partition_identity",
    "EllgtError", "DomainError", "PoleError", "DegenerateParametersError",
    "EnumerationLimitError",
]
