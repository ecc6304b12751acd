"""Gibbs states, level mixtures and moments built from a spectral decomposition.

k_B = 1 throughout, so beta = 1/T.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError
from .spectra import DEGENERACY_TOL, ground_state


@dataclass(frozen=True)
class ThermalState:
    """Diagonal mixture sum_k w_k |v_k><v_k| over the eigenvectors of ``spectral``.

    ``beta`` is +inf for zero-temperature states and for equal mixtures over
    a single level.
    """

    spectral: object = field(repr=False)
    beta: float
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (self.spectral.dim,):
            raise ArgumentError("one weight per eigenstate is required")
        if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise ArgumentError("weights must be non-negative and sum to 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n_sites(self):
        return self.spectral.n_sites

    @property
    def temperature(self):
        return 0.0 if math.isinf(self.beta) else 1.0 / self.beta

    def support(self, cutoff=0.0):
        """Indices of eigenstates with weight above ``cutoff``."""
        return np.flatnonzero(self.weights > cutoff)

    def density_matrix(self):
        idx = self.support()
        v = self.spectral.eigenvectors[:, idx]
        return (v * self.weights[idx]) @ v.T


def _finite_beta(beta):
    beta = float(beta)
    if not math.isfinite(beta):
        raise ArgumentError("beta must be finite; use level_mixture for T = 0")
    if beta < 0:
        raise ArgumentError("beta must be non-negative")
    return beta


def boltzmann_weights(spec, beta):
    beta = _finite_beta(beta)
    e = spec.eigenvalues
    x = np.exp(-beta * (e - e[0]))
    return x / x.sum()


def log_partition_function(spec, beta):
    beta = _finite_beta(beta)
    e = spec.eigenvalues
    return -beta * e[0] + math.log(np.exp(-beta * (e - e[0])).sum())


def partition_function(spec, beta):
    """Z = Tr exp(-beta H); may overflow to inf for very large beta*|E_min|."""
    return math.exp(log_partition_function(spec, beta))


def thermal_state(spec, beta):
    """Gibbs state at inverse temperature beta; beta = inf gives the ground-level mixture."""
    if math.isinf(float(beta)) and beta > 0:
        return level_mixture(ground_state(spec))
    return ThermalState(spec, float(beta), boltzmann_weights(spec, beta))


def state_at_temperature(spec, temperature, degeneracy_tol=DEGENERACY_TOL):
    """Gibbs state at T >= 0; T = 0 is the equal mixture over the ground level."""
    temperature = float(temperature)
    if not temperature >= 0:
        raise ArgumentError(f"temperature must be >= 0, got {temperature}")
    if temperature == 0:
        return level_mixture(ground_state(spec, degeneracy_tol))
    return thermal_state(spec, 1.0 / temperature)


def level_mixture(level):
    """Equal mixture over one (possibly degenerate) energy level."""
    spec = level.spectral
    if spec is None:
        raise ArgumentError("level carries no spectral decomposition")
    w = np.zeros(spec.dim)
    w[level.indices] = 1.0 / level.degeneracy
    return ThermalState(spec, math.inf, w)


def diagonal_expectations(spec, op):
    """<v_k|op|v_k> for every eigenvector.

    Cheap to reuse: a thermal expectation at any beta is the weighted sum of
    this array.
    """
    if op.dim != spec.dim:
        raise ArgumentError(f"operator dimension {op.dim} != spectrum dimension {spec.dim}")
    v = spec.eigenvectors
    return np.einsum("ik,ik->k", v, op.matrix @ v)


def thermal_expectation(state, op):
    """sum_k w_k <v_k|op|v_k>."""
    spec = state.spectral
    if op.dim != spec.dim:
        raise ArgumentError(f"operator dimension {op.dim} != state dimension {spec.dim}")
    idx = state.support()
    v = spec.eigenvectors[:, idx]
    diag = np.einsum("ik,ik->k", v, op.matrix @ v)
    return float(state.weights[idx] @ diag)


def cumulant_moment(spec, beta, n):
    """<H^n> in the Gibbs state, from the spectrum directly."""
    if int(n) != n or n < 1:
        raise ArgumentError(f"moment order must be a positive integer, got {n!r}")
    w = boltzmann_weights(spec, beta)
    return float(w @ spec.eigenvalues ** int(n))
