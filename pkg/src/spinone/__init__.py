"""Pairwise negativity in spin-1 Heisenberg rings by exact diagonalization."""

from .analysis import (PairCorrelations, SweepRecord, ThresholdResult, all_to_all_report,
                       gamma_sweep, hellmann_feynman_check, level_crossings, temperature_sweep,
                       thermal_negativity, threshold_curve, threshold_temperature)
from .entanglement import (CorrelatorPair, Su2Coefficients, TwoSiteState, correlators,
                           negativity_by_definition, negativity_su2, negativity_swap_form,
                           partial_transpose, schliemann_entangled, su2_state_from_coefficients,
                           two_site_rdm)
from .errors import ArgumentError, BracketError, CapacityError, LevelCrossingError, SpinOneError
from .model import ModelSpec, build_hamiltonian, build_level_projector
from .spectra import GroundStateInfo, SpectralDecomposition, diagonalize, energy_level, ground_state
from .spin_algebra import (DenseOperator, pair_heisenberg, pair_heisenberg_squared, pair_swap,
                           total_spin_component)
from .thermal import (ThermalState, cumulant_moment, level_mixture, partition_function,
                      state_at_temperature, thermal_expectation, thermal_state)

__version__ = "0.1.0"
