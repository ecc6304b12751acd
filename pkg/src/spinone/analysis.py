"""
Experiments built on the lower layers: thermal negativity records, gamma and
temperature sweeps, threshold temperatures, level-crossing scans and
Hellmann-Feynman cross-checks.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from . import spin_algebra as sa
from .entanglement import CorrelatorPair, negativity_su2
from .errors import ArgumentError, BracketError, LevelCrossingError
from .model import ALL_TO_ALL, BILINEAR, BILINEAR_BIQUADRATIC, ModelSpec, bonds, build_hamiltonian
from .spectra import DEGENERACY_TOL, diagonalize, ground_state, thread_count
from .thermal import boltzmann_weights, diagonal_expectations, log_partition_function

NEGATIVITY_EPS = 1e-12
THRESHOLD_TOL = 1e-6
FD_STEP = 1e-4

# default gamma-sweep temperatures, keyed by ring size in the CLI
SWEEP_TEMPS_TWO_SPIN = (0.05, 0.5, 1.0, 1.5)
SWEEP_TEMPS_THREE_SPIN = (0.015, 0.1, 0.5, 1.0)
SWEEP_TEMPS_FOUR_SPIN = (0.01, 0.03, 0.5, 1.0)


def default_gamma_grid():
    return np.linspace(-1.0, 1.0, 201)


@dataclass(frozen=True)
class SweepRecord:
    model: str
    n: int
    j: float
    gamma: Optional[float]
    temp: float
    pair_i: int
    pair_j: int
    c1: float
    c2: float
    negativity: float

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ThresholdResult:
    model: str
    n: int
    j: float
    gamma: Optional[float]
    pair_i: int
    pair_j: int
    t_th: Optional[float]
    t_lo: Optional[float]
    t_hi: Optional[float]
    tol: float
    status: str = "ok"

    def as_dict(self):
        return asdict(self)


class PairCorrelations:
    """Spectrum of one model plus per-eigenstate pair correlators.

    Once built, correlators and negativity at any temperature cost one
    weighted sum, which keeps sweeps and bisection cheap.
    """

    def __init__(self, spec, pair=(1, 2), degeneracy_tol=DEGENERACY_TOL):
        i, j = pair
        sa.check_pair(i, j, spec.n_sites)
        self.model = spec
        self.pair = (i, j)
        self.spectral = diagonalize(build_hamiltonian(spec))
        self.ground = ground_state(self.spectral, degeneracy_tol)
        self._d1 = diagonal_expectations(self.spectral, sa.pair_heisenberg(i, j, spec.n_sites))
        self._d2 = diagonal_expectations(self.spectral, sa.pair_heisenberg_squared(i, j, spec.n_sites))

    def weights(self, temperature):
        if temperature < 0 or math.isnan(temperature):
            raise ArgumentError(f"temperature must be >= 0, got {temperature}")
        if temperature == 0:
            w = np.zeros(self.spectral.dim)
            w[self.ground.indices] = 1.0 / self.ground.degeneracy
            return w
        return boltzmann_weights(self.spectral, 1.0 / temperature)

    def correlators(self, temperature):
        w = self.weights(temperature)
        return CorrelatorPair(float(w @ self._d1), float(w @ self._d2))

    def negativity(self, temperature):
        return negativity_su2(self.correlators(temperature))

    def record(self, temperature):
        c = self.correlators(temperature)
        s = self.model
        return SweepRecord(s.kind, s.n_sites, s.J, s.gamma, float(temperature),
                           self.pair[0], self.pair[1], c.c1, c.c2, negativity_su2(c))


def thermal_negativity(spec, temperature, pair=(1, 2)):
    return PairCorrelations(spec, pair).record(temperature)


def temperature_sweep(spec, temps, pair=(1, 2)):
    data = PairCorrelations(spec, pair)
    return [data.record(t) for t in temps]


def _template_at(template, gamma):
    if template.kind != BILINEAR_BIQUADRATIC:
        return ModelSpec(BILINEAR_BIQUADRATIC, template.n_sites, template.J, float(gamma))
    return template.with_(gamma=float(gamma))


def _map_ordered(fn, items):
    # results come back in input order whatever the completion order
    workers = thread_count()
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def gamma_sweep(template, gamma_grid, temps, pair=(1, 2)):
    """Records for every (T, gamma), ordered by T then gamma."""
    gammas = [float(g) for g in gamma_grid]
    temps = [float(t) for t in temps]
    if not gammas or not temps:
        raise ArgumentError("gamma grid and temperature list must be non-empty")
    per_gamma = _map_ordered(
        lambda g: [PairCorrelations(_template_at(template, g), pair).record(t) for t in temps],
        gammas)
    return [per_gamma[g][t] for t in range(len(temps)) for g in range(len(gammas))]


def _bisect_threshold(negativity, t_lo, t_hi, tol, eps):
    n_lo, n_hi = negativity(t_lo), negativity(t_hi)
    if not (n_lo > eps and n_hi <= eps):
        raise BracketError(
            f"no entangled-to-separable transition in [{t_lo}, {t_hi}]: "
            f"negativity {n_lo:.3g} at T={t_lo}, {n_hi:.3g} at T={t_hi}",
            t_lo, t_hi, n_lo, n_hi)
    lo, hi = t_lo, t_hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if negativity(mid) > eps:
            lo = mid
        else:
            hi = mid
    return lo, hi


def threshold_temperature(spec, pair=(1, 2), t_lo=0.0, t_hi=10.0, tol=THRESHOLD_TOL,
                          eps=NEGATIVITY_EPS):
    """Temperature above which the pair negativity drops to zero (bisection)."""
    if tol <= 0:
        raise ArgumentError("tol must be positive")
    if not 0 <= t_lo < t_hi:
        raise ArgumentError(f"need 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]")
    data = PairCorrelations(spec, pair)
    lo, hi = _bisect_threshold(data.negativity, t_lo, t_hi, tol, eps)
    return ThresholdResult(spec.kind, spec.n_sites, spec.J, spec.gamma, pair[0], pair[1],
                           0.5 * (lo + hi), lo, hi, tol)


def threshold_curve(template, gamma_grid, pair=(1, 2), t_lo=0.0, t_hi=10.0, tol=THRESHOLD_TOL):
    """T_th for every gamma; bracket failures become status='bracket-error' rows."""
    gammas = [float(g) for g in gamma_grid]
    if not gammas:
        raise ArgumentError("gamma grid must be non-empty")

    def one(g):
        spec = _template_at(template, g)
        try:
            return threshold_temperature(spec, pair, t_lo, t_hi, tol)
        except BracketError:
            return ThresholdResult(spec.kind, spec.n_sites, spec.J, spec.gamma, pair[0], pair[1],
                                   None, None, None, tol, "bracket-error")

    return _map_ordered(one, gammas)


# --- level crossings -------------------------------------------------------------

@dataclass(frozen=True)
class LevelCrossing:
    gamma_left: float
    gamma_right: float
    degeneracy_left: int
    degeneracy_right: int
    gamma: float


def ground_degeneracy(spec):
    return ground_state(diagonalize(build_hamiltonian(spec))).degeneracy


def _lowest_levels(spec):
    # (ground degeneracy, ground energy, next degeneracy, next energy)
    s = diagonalize(build_hamiltonian(spec))
    levels = s.levels()
    e = s.eigenvalues
    return len(levels[0]), e[levels[0][0]], len(levels[1]), e[levels[1][0]]


def _interpolate_crossing(template, lo, hi):
    # zero of the gap between the two competing levels, linear in gamma
    d_lo, e0_lo, n_lo, e1_lo = _lowest_levels(_template_at(template, lo))
    d_hi, e0_hi, n_hi, e1_hi = _lowest_levels(_template_at(template, hi))
    if n_lo != d_hi or n_hi != d_lo:
        return 0.5 * (lo + hi)
    gap_lo, gap_hi = e1_lo - e0_lo, e1_hi - e0_hi
    return lo + (hi - lo) * gap_lo / (gap_lo + gap_hi)


def level_crossings(template, gamma_grid, refine_tol=1e-7):
    """Grid intervals where the ground-level degeneracy changes.

    Each flagged interval is bisected on the degeneracy down to ``refine_tol``;
    the crossing location ``gamma`` is then the zero of the linearly
    interpolated gap between the two competing levels.
    """
    gammas = [float(g) for g in gamma_grid]
    degs = _map_ordered(lambda g: ground_degeneracy(_template_at(template, g)), gammas)
    found = []
    k = 0
    while k < len(gammas) - 1:
        g0, d0, g1, d1 = gammas[k], degs[k], gammas[k + 1], degs[k + 1]
        k += 1
        if d0 == d1:
            continue
        if k + 1 < len(gammas) and degs[k + 1] != d1:
            # grid point g1 sits exactly on the crossing
            found.append(LevelCrossing(g0, gammas[k + 1], d0, degs[k + 1], g1))
            k += 1
            continue
        lo, hi = g0, g1
        while hi - lo > refine_tol:
            mid = 0.5 * (lo + hi)
            d = ground_degeneracy(_template_at(template, mid))
            if d == d0:
                lo = mid
            elif d == d1:
                hi = mid
            else:
                # landed on the crossing itself
                lo = hi = mid
        gamma = lo if lo == hi else _interpolate_crossing(template, lo, hi)
        found.append(LevelCrossing(g0, g1, d0, d1, gamma))
    return found


# --- Hellmann-Feynman cross-checks --------------------------------------------------

@dataclass(frozen=True)
class HellmannFeynmanReport:
    temperature: float
    c1_direct: float
    c2_direct: float
    c1_derivative: float
    c2_derivative: float
    negativity_direct: float
    negativity_derivative: float

    @property
    def max_discrepancy(self):
        return max(abs(self.c1_direct - self.c1_derivative),
                   abs(self.c2_direct - self.c2_derivative),
                   abs(self.negativity_direct - self.negativity_derivative))


def _as_biquadratic(spec):
    if spec.kind == ALL_TO_ALL:
        raise ArgumentError("Hellmann-Feynman check is defined for ring models only")
    if spec.kind == BILINEAR:
        return ModelSpec(BILINEAR_BIQUADRATIC, spec.n_sites, spec.J, 0.0)
    return spec


def hellmann_feynman_check(spec, delta=FD_STEP, temperature=0.0, pair=(1, 2)):
    """Compare direct correlators with coupling derivatives of E_GS (T = 0) or ln Z (T > 0).

    Derivatives are divided by the number of bonds, which is N on rings with
    N >= 3 and 1 for the two-site ring.
    """
    spec = _as_biquadratic(spec)
    n_bonds = len(bonds(spec))
    direct = PairCorrelations(spec, pair)
    c = direct.correlators(temperature)

    def shifted(dj, dg):
        return spec.with_(J=spec.J + dj, gamma=spec.gamma + dg)

    if temperature == 0:
        if direct.ground.degeneracy != 1:
            raise LevelCrossingError(
                f"ground level is {direct.ground.degeneracy}-fold degenerate at gamma={spec.gamma}")
        for dj, dg in ((10 * delta, 0), (-10 * delta, 0), (0, 10 * delta), (0, -10 * delta)):
            d = ground_degeneracy(shifted(dj, dg))
            if d != 1:
                raise LevelCrossingError(
                    f"level crossing within 10*delta of (J={spec.J}, gamma={spec.gamma}): "
                    f"degeneracy {d} at J+{dj}, gamma+{dg}")

        def f(s):
            return float(diagonalize(build_hamiltonian(s)).eigenvalues[0])
    else:
        beta = 1.0 / temperature

        # d lnZ / d coupling = -beta <dH/d coupling>
        def f(s):
            return -log_partition_function(diagonalize(build_hamiltonian(s)), beta) / beta

    d_j = (f(shifted(delta, 0)) - f(shifted(-delta, 0))) / (2 * delta)
    d_g = (f(shifted(0, delta)) - f(shifted(0, -delta))) / (2 * delta)
    hf = CorrelatorPair(d_j / n_bonds, d_g / n_bonds)
    return HellmannFeynmanReport(float(temperature), c.c1, c.c2, hf.c1, hf.c2,
                                 negativity_su2(c), negativity_su2(hf))


# --- all-to-all model ------------------------------------------------------------------

@dataclass(frozen=True)
class AllToAllReport:
    n: int
    energy: float
    degeneracy: int
    c1: float
    c2: float
    negativity: float


def all_to_all_report(n, J=1.0, pair=(1, 2)):
    if not 2 <= n <= 6:
        raise ArgumentError(f"all-to-all report covers 2 <= n <= 6, got {n}")
    data = PairCorrelations(ModelSpec(ALL_TO_ALL, n, J), pair)
    c = data.correlators(0.0)
    return AllToAllReport(n, data.ground.energy, data.ground.degeneracy, c.c1, c.c2,
                          negativity_su2(c))
