# Constructions Module
from .witness import WitnessTable, iota_of, witness_table
from .dyadic import DyadicBasis, DyadicInterval, dyadic_basis, level_of, level_offset
from .mu_x import (
    MuX, RowDyadicBasis, cos_integral, density, iota_modulus, kernel_at, mu_x, mu_x_on_basis, nu_at_zero,
    resolution, row_integral,
)
from .embed import alpha, alpha_preimage, embed_discrete, phi, phi_ball
from .eta_x import digit_interval, eta_x
from .rho import FaithfulStream, block_at, occurring_runs, pattern_bit, pattern_length, rho, rho_inverse
from .mixture import Mixture, cell_ratio, first_occurrence, mixture, union_bound
from .recovery import (
    ReductionReport, recover_bit, recover_x, reduce_demo, reduction_realizer, scaled_atom,
)

__all__ = [
    "WitnessTable", "iota_of", "witness_table",
    "DyadicBasis", "DyadicInterval", "dyadic_basis", "level_of", "level_offset",
    "MuX", "RowDyadicBasis", "cos_integral", "density", "iota_modulus", "kernel_at", "mu_x", "mu_x_on_basis",
    "nu_at_zero", "resolution", "row_integral",
    "alpha", "alpha_preimage", "embed_discrete", "phi", "phi_ball",
    "digit_interval", "eta_x",
    "FaithfulStream", "block_at", "occurring_runs", "pattern_bit", "pattern_length", "rho", "rho_inverse",
    "Mixture", "cell_ratio", "first_occurrence", "mixture", "union_bound",
    "ReductionReport", "recover_bit", "recover_x", "reduce_demo", "reduction_realizer", "scaled_atom",
]
