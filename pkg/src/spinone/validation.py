"""Reference values for small rings, checked by ``spinone validate``."""

import math
from dataclasses import dataclass

import numpy as np

from . import spin_algebra as sa
from .analysis import (PairCorrelations, all_to_all_report, gamma_sweep, hellmann_feynman_check,
                       level_crossings, threshold_temperature)
from .entanglement import correlators, negativity_by_definition, negativity_su2, two_site_rdm
from .model import ModelSpec, build_hamiltonian, build_level_projector
from .spectra import diagonalize, energy_level, ground_state
from .thermal import level_mixture, partition_function, thermal_expectation

EXACT = 1e-10


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    expected: float
    value: float
    tol: float

    @property
    def passed(self):
        return bool(abs(self.value - self.expected) <= self.tol)


def two_spin_partition(beta):
    return math.exp(2 * beta) + 3 * math.exp(beta) + 5 * math.exp(-beta)


def two_spin_negativity(beta):
    z = two_spin_partition(beta)
    return max(0.0, 2 * math.exp(2 * beta) - 3 * math.exp(beta) - 5 * math.exp(-beta)) / (2 * z)


def two_spin_threshold():
    """Closed-form T_th of the two-spin ring (Cardano root of 2x^3 - 3x^2 - 5)."""
    c = (11 + 2 * math.sqrt(30)) ** (1 / 3)
    return 1 / math.log(0.5 + 1 / (2 * c) + c / 2)


def _spectrum_checks():
    spec = diagonalize(build_hamiltonian(ModelSpec("bilinear", 2)))
    expected = np.array([-2.0] + [-1.0] * 3 + [1.0] * 5)
    yield GoldenCheck("two-spin spectrum max deviation", 0.0,
                      float(np.max(np.abs(spec.eigenvalues - expected))), EXACT)
    for k, target in enumerate((1.0, 1 / 3, 0.0)):
        state = level_mixture(energy_level(spec, k))
        by_def = negativity_by_definition(two_site_rdm(state, 1, 2))
        by_su2 = negativity_su2(correlators(state, 1, 2))
        yield GoldenCheck(f"two-spin level {k} negativity (partial transpose)", target, by_def, EXACT)
        yield GoldenCheck(f"two-spin level {k} negativity (correlators)", target, by_su2, EXACT)
    h = build_hamiltonian(ModelSpec("bilinear", 2))
    for e_k, dim in ((-1.0, 3), (-2.0, 1)):
        proj = diagonalize(build_level_projector(h, e_k))
        yield GoldenCheck(f"level projector ground dimension at E={e_k:g}", dim,
                          ground_state(proj).degeneracy, 0)


def _two_spin_thermal_checks():
    spec = diagonalize(build_hamiltonian(ModelSpec("bilinear", 2)))
    data = PairCorrelations(ModelSpec("bilinear", 2))
    for beta in (0.2, 0.5, 1.0, 2.0):
        z_ref = two_spin_partition(beta)
        yield GoldenCheck(f"two-spin Z relative error at beta={beta:g}", 0.0,
                          abs(partition_function(spec, beta) / z_ref - 1), 1e-12)
        yield GoldenCheck(f"two-spin thermal negativity at beta={beta:g}", two_spin_negativity(beta),
                          data.negativity(1 / beta), 1e-12)
    t_th = threshold_temperature(ModelSpec("bilinear", 2)).t_th
    yield GoldenCheck("two-spin T_th (quoted)", 1.3667, t_th, 1e-3)
    yield GoldenCheck("two-spin T_th (closed form)", two_spin_threshold(), t_th, 1e-6)


def _ring_checks():
    n3 = PairCorrelations(ModelSpec("bilinear", 3))
    c = n3.correlators(0)
    yield GoldenCheck("three-spin ground energy", -3.0, n3.ground.energy, EXACT)
    yield GoldenCheck("three-spin <S1.S2>", -1.0, c.c1, EXACT)
    yield GoldenCheck("three-spin <(S1.S2)^2>", 1.0, c.c2, EXACT)
    yield GoldenCheck("three-spin negativity", 1 / 3, n3.negativity(0), EXACT)
    yield GoldenCheck("three-spin T_th", 0.9085, threshold_temperature(ModelSpec("bilinear", 3)).t_th, 1e-3)

    n4 = PairCorrelations(ModelSpec("bilinear", 4))
    c = n4.correlators(0)
    gs = level_mixture(n4.ground)
    yield GoldenCheck("four-spin ground energy", -6.0, n4.ground.energy, EXACT)
    yield GoldenCheck("four-spin <S1.S2>", -1.5, c.c1, EXACT)
    yield GoldenCheck("four-spin swap expectation", 1 / 6,
                      thermal_expectation(gs, sa.pair_swap(1, 2, 4)), EXACT)
    yield GoldenCheck("four-spin negativity", 1 / 3, n4.negativity(0), EXACT)
    yield GoldenCheck("four-spin T_th", 1.3804, threshold_temperature(ModelSpec("bilinear", 4)).t_th, 1e-3)

    for n, neg, t_th in ((5, 0.1240, 0.95), (6, 0.2509, 1.21)):
        spec = ModelSpec("bilinear", n)
        yield GoldenCheck(f"{n}-spin negativity", neg, PairCorrelations(spec).negativity(0), 5e-4)
        yield GoldenCheck(f"{n}-spin T_th", t_th, threshold_temperature(spec).t_th, 1e-2)


def _biquadratic_checks():
    for gamma in (-1.0, -0.5, 0.0, 0.3, 0.4, 0.7, 1.0):
        data = PairCorrelations(ModelSpec("bb", 2, gamma=gamma))
        e_ref = -2 + 4 * gamma if gamma < 1 / 3 else -1 + gamma
        n_ref = 1.0 if gamma < 1 / 3 else 1 / 3
        yield GoldenCheck(f"two-spin bb ground energy at gamma={gamma:g}", e_ref, data.ground.energy, EXACT)
        yield GoldenCheck(f"two-spin bb negativity at gamma={gamma:g}", n_ref, data.negativity(0), EXACT)
    crossing = level_crossings(ModelSpec("bb", 2, gamma=0.0), np.linspace(-1, 1, 201))
    yield GoldenCheck("two-spin bb crossing", 1 / 3, crossing[0].gamma if crossing else math.nan, 1e-6)
    rows = gamma_sweep(ModelSpec("bb", 2, gamma=0.0), np.linspace(-1, 1, 201), [1.5])
    yield GoldenCheck("two-spin bb zero-negativity points at T=1.5 (count > 0)", 1.0,
                      float(any(r.negativity == 0 for r in rows)), 0)
    crossing = level_crossings(ModelSpec("bb", 3, gamma=0.0), np.linspace(-1, 1, 201))
    yield GoldenCheck("three-spin bb crossing", -0.2121, crossing[0].gamma if crossing else math.nan, 5e-3)


def _all_to_all_checks():
    for n in range(2, 7):
        rep = all_to_all_report(n)
        yield GoldenCheck(f"all-to-all N={n} ground energy", -n, rep.energy, EXACT)
        yield GoldenCheck(f"all-to-all N={n} <Si.Sj>", -2 / (n - 1), rep.c1, EXACT)
        yield GoldenCheck(f"all-to-all N={n} negativity", {2: 1.0, 3: 1 / 3}.get(n, 0.0), rep.negativity, EXACT)
    yield GoldenCheck("all-to-all N=4 ground degeneracy > 1", 1.0,
                      float(all_to_all_report(4).degeneracy > 1), 0)


def _hellmann_feynman_checks():
    rep = hellmann_feynman_check(ModelSpec("bb", 2, gamma=0.0))
    yield GoldenCheck("two-spin dE/dJ per bond", -2.0, rep.c1_derivative, 1e-5)
    yield GoldenCheck("two-spin dE/dgamma per bond", 4.0, rep.c2_derivative, 1e-5)
    rep = hellmann_feynman_check(ModelSpec("bb", 3, gamma=0.0))
    yield GoldenCheck("three-spin dE/dJ per bond", -1.0, rep.c1_derivative, 1e-5)


SECTIONS = (_spectrum_checks, _two_spin_thermal_checks, _ring_checks, _biquadratic_checks,
            _all_to_all_checks, _hellmann_feynman_checks)


def run_checks():
    return [check for section in SECTIONS for check in section()]


def format_table(checks):
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'expected':>14}  {'value':>14}  {'tol':>8}  result"]
    for c in checks:
        lines.append(f"{c.name:<{width}}  {c.expected:>14.10g}  {c.value:>14.10g}  {c.tol:>8.1g}  "
                     f"{'PASS' if c.passed else 'FAIL'}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} passed")
    return "\n".join(lines)
