"""Initial degrees of symbolic powers of fat points on P^1 x P^1, in exact arithmetic."""

from .exactmath import DEFAULT_PRIME, Matrix, kernel_basis, rank, rank_modp
from .geometry import (
    FatPointConfig,
    Fiber,
    ProductPoint,
    ProjCoord,
    affine_config,
    affine_point,
    chart_transform,
    grid_config,
    is_grid,
    make_config,
    normalize_point,
    on_single_fiber,
)
from .invariants import (
    PLUS,
    STAR,
    JumpVector,
    WaldschmidtBounds,
    alpha_plus,
    alpha_sequence,
    alpha_star,
    alpha_weighted,
    grid_alpha_star,
    grid_minus_point_alpha,
    grid_sequence,
    jump_vector,
    jumps_from_alphas,
    recover_grid,
    waldschmidt_bounds,
)
from .linsys import BiDegree, BiForm, conditions_matrix, divide_by_fiber, h0, mult_at, witness_form

__version__ = "0.1.0"
