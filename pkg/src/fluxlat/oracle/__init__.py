"""Exact-diagonalization and analytic oracles: single-mode circuit spectra,
small-array brute force, lattice transfer matrices, and dephasing predictions."""

from .single_mode import SingleModeSpec, SingleModeResult, diag_single_mode, nu01, structure_factor
from .small_array import exact_diag_small_array
from .phase_slip import (
    DephasingPrediction,
    dephasing_predictions,
    dressed_EC_ground,
    dressed_EL,
    eps_ps_analytic,
    eps_ps_modified,
    eps_ps_numeric,
)
from .transfer_matrix import SingleJunctionTransferMatrix, TwoJunctionTransferMatrix

__all__ = [
    "SingleModeSpec",
    "SingleModeResult",
    "diag_single_mode",
    "nu01",
    "structure_factor",
    "exact_diag_small_array",
    "DephasingPrediction",
    "dephasing_predictions",
    "dressed_EC_ground",
    "dressed_EL",
    "eps_ps_analytic",
    "eps_ps_modified",
    "eps_ps_numeric",
    "SingleJunctionTransferMatrix",
    "TwoJunctionTransferMatrix",
]
