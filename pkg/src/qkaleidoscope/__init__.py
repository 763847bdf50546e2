"""Kaleidoscope states of light: mod-n exponentials, truncated Fock numerics,
photon-number curves and the finite q-oscillator algebra."""

from .errors import (
    DimensionMismatchError,
    DivergenceError,
    DomainError,
    KaleidoscopeError,
    NegativeRadicandError,
    SeriesOverflowError,
    UnsupportedOrderError,
)
from .fock import FockVector, coherent_state, number_expectation, truncation_dim
from .kaleidoscope import KaleidoscopeBasis, build_basis, build_state_direct, build_state_qft, qft_matrix
from .modexp import ModExpFamily, RootOfUnity, mod_exp_closed, mod_exp_series, mod_exp_superposition
from .photon import photon_curve, photon_expectation
from .qalgebra import QNumberKind, b_operators, hamiltonian_spectrum, q_number, sylvester_pair

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatchError",
    "DivergenceError",
    "DomainError",
    "FockVector",
    "KaleidoscopeBasis",
    "KaleidoscopeError",
    "ModExpFamily",
    "NegativeRadicandError",
    "QNumberKind",
    "RootOfUnity",
    "SeriesOverflowError",
    "UnsupportedOrderError",
    "b_operators",
    "build_basis",
    "build_state_direct",
    "build_state_qft",
    "coherent_state",
    "hamiltonian_spectrum",
    "mod_exp_closed",
    "mod_exp_series",
    "mod_exp_superposition",
    "number_expectation",
    "photon_curve",
    "photon_expectation",
    "q_number",
    "qft_matrix",
    "sylvester_pair",
    "truncation_dim",
]
