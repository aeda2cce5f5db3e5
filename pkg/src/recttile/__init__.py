"""Tilings of integer rectangles by the special tile set, via polarized Z/2-harmonic functions."""
from .bijection import CapExceeded, active_neighborhood, phi, psi, verify_bijection
from .count import count_tilings, enumerate_tilings, verify_all
from .gf2 import Gf2Matrix, Gf2Vector, matvec, nullspace_basis, rank
from .grid import Color, GridGraph, build_bw, build_wb, grid_structure
from .harmonic import (
    PolarizedVector,
    check_symmetries,
    kernel_basis_elimination,
    kernel_basis_structured,
    kernel_basis_transfer,
    kernel_dims_closed_form,
    laplacian_residual,
)
from .tiling import Tile, TileClass, Tiling, validate_tiling

__version__ = "0.1.0"
