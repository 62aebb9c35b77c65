"""Entangling stationary spin-1/2 impurities by single-electron scattering."""

from .core import (
    PSI_MINUS,
    PSI_PLUS,
    apply_on_sites,
    basis_state,
    kron,
    measure_site,
    partial_trace,
)
from .entanglement import (
    binary_entropy,
    concurrence_mixed,
    concurrence_pure,
    eof_from_concurrence,
)
from .ideal import (
    IdealCoefficients,
    IdealPoint,
    closed_form_coefficients,
    closed_form_state,
    exchange_unitary,
    ideal_point,
    simulate_sequential,
    sweep_ideal,
)
from .scattering import (
    ScatteringAmplitudes,
    ScatterPoint,
    find_max_entanglement,
    normalized_amplitudes,
    raw_series_order3,
    scatter_point,
    series_params,
    sweep_scatter,
)
from .transfer import exact_transfer_matrix, single_impurity_smatrix

__all__ = [
    "PSI_MINUS",
    "PSI_PLUS",
    "apply_on_sites",
    "basis_state",
    "kron",
    "measure_site",
    "partial_trace",
    "binary_entropy",
    "concurrence_mixed",
    "concurrence_pure",
    "eof_from_concurrence",
    "IdealCoefficients",
    "IdealPoint",
    "closed_form_coefficients",
    "closed_form_state",
    "exchange_unitary",
    "ideal_point",
    "simulate_sequential",
    "sweep_ideal",
    "ScatteringAmplitudes",
    "ScatterPoint",
    "find_max_entanglement",
    "normalized_amplitudes",
    "raw_series_order3",
    "scatter_point",
    "series_params",
    "sweep_scatter",
    "exact_transfer_matrix",
    "single_impurity_smatrix",
]

__version__ = "0.1.0"
