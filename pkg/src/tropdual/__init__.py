"""Duality for finitely generated max-plus (tropical) cones."""

from .scalar import EPS, TOP, t_add, t_conj, t_mul, t_residual
from .linalg import (
    DimensionError, DomainError, TropMatrix, bracket, cone_equal, mat_residual, mat_vec,
    member, perturb_top, project, vec_combine, vec_conj, vec_residual,
)
from .solver import Constraint, ConstraintSystem, prune, solve_single_le, solve_system
from .duality import (
    PairCone, closure_congruence, closure_polar, dual_polar, dual_top, inequality_to_equality,
    is_closed_congruence, is_closed_polar_cone, is_pair_combination, max_rep_congruence,
    max_rep_polar, orthogonal_of_cone, pair_in_orthogonal, pair_in_polar, polar_of_cone,
)
from .separation import (
    PerturbationExhausted, Witness, separate_pair_congruence, separate_pair_congruence_complete,
    separate_pair_polar, separate_pair_polar_complete, separate_point,
)

__version__ = "0.1.0"
