"""Exact jumping numbers of simple complete ideals and plane branches."""

from .closed_form import (
    JumpDecomposition,
    JumpingSetDescription,
    enumerate_jumps,
    generators,
    hilbert_samuel,
    invert_jumping_numbers,
    is_jumping_number,
    jump_values,
    lct,
    order_from_three_smallest,
    xi_prime,
    zariski_exponents,
)
from .multiplier import c_R_definitional, c_R_direct, c_R_reduced, multiplier_ideal, oracle_jumping_numbers
from .proximity import (
    PointBasis,
    ProximityMatrix,
    classify,
    invert_proximity,
    point_basis_from_proximity,
    point_basis_from_puiseux,
    proximity_from_point_basis,
    puiseux_exponents,
    validate_point_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
