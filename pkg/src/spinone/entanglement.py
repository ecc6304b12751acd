"""
Pairwise negativity of spin-1 states.

Two independent routes are provided: the definition (negative spectrum of
the partially transposed 9x9 reduced density matrix) and the closed form
for SU(2)-invariant states, which needs only the correlators
c1 = <S_i.S_j> and c2 = <(S_i.S_j)^2>.
"""

from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from . import spin_algebra as sa
from .errors import ArgumentError
from .thermal import ThermalState, thermal_expectation

NEGATIVE_CUTOFF = 1e-12
TRACE_NORM_TOL = 1e-10


@dataclass(frozen=True)
class TwoSiteState:
    """9x9 density matrix of a site pair in the product basis |n_i n_j>."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (9, 9):
            raise ArgumentError("two-site state must be 9x9")
        if abs(np.trace(m) - 1.0) > 1e-10:
            raise ArgumentError(f"trace {np.trace(m)} != 1")
        if np.max(np.abs(m - m.T)) > 1e-10:
            raise ArgumentError("two-site state is not symmetric")
        m = 0.5 * (m + m.T)
        if np.linalg.eigvalsh(m)[0] < -1e-10:
            raise ArgumentError("two-site state is not positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class CorrelatorPair:
    c1: float
    c2: float


@dataclass(frozen=True)
class Su2Coefficients:
    """Weights G (total spin 0) and H (total spin 1) of an SU(2)-invariant pair state."""

    G: float
    H: float

    @classmethod
    def from_correlators(cls, c):
        return cls((c.c2 - 1.0) / 3.0, 1.0 - 0.5 * (c.c1 + c.c2))

    def to_correlators(self):
        # inverse of from_correlators
        c2 = 3.0 * self.G + 1.0
        c1 = 2.0 * (1.0 - self.H) - c2
        return CorrelatorPair(c1, c2)

    @property
    def is_physical(self):
        return self.G >= 0 and self.H >= 0 and 1.0 - self.G - self.H >= 0


# --- reduced density matrices -------------------------------------------------

def _pair_amplitudes(vectors, i, j, n_sites):
    # columns of `vectors` reshaped to (9, rest) blocks stacked along axis 1
    k = vectors.shape[1]
    t = vectors.reshape((3,) * n_sites + (k,))
    rest = [a for a in range(n_sites) if a not in (i - 1, j - 1)]
    t = np.transpose(t, [i - 1, j - 1] + rest + [n_sites])
    return t.reshape(9, -1)


def two_site_rdm(state, i, j):
    """Reduced density matrix of sites (i, j) for a ThermalState or a pure vector."""
    if isinstance(state, ThermalState):
        n = state.n_sites
        sa.check_pair(i, j, n)
        idx = state.support()
        vecs = state.spectral.eigenvectors[:, idx] * np.sqrt(state.weights[idx])
    else:
        psi = np.asarray(state, dtype=float)
        n = int(round(np.log(psi.size) / np.log(3)))
        if psi.ndim != 1 or 3 ** n != psi.size:
            raise ArgumentError("pure state must be a vector of length 3**N")
        sa.check_pair(i, j, n)
        vecs = (psi / np.linalg.norm(psi))[:, None]
    amp = _pair_amplitudes(vecs, i, j, n)
    return TwoSiteState(amp @ amp.T)


def partial_transpose(rho, site=2):
    """Transpose on one factor of the pair (site=2: the second, j)."""
    m = rho.matrix if isinstance(rho, TwoSiteState) else np.asarray(rho, dtype=float)
    t = m.reshape(3, 3, 3, 3)
    if site == 2:
        return t.transpose(0, 3, 2, 1).reshape(9, 9)
    if site == 1:
        return t.transpose(2, 1, 0, 3).reshape(9, 9)
    raise ArgumentError("site must be 1 or 2")


def negativity_by_definition(rho, site=2):
    """Sum of |negative eigenvalues| of the partial transpose.

    Also evaluates (||rho^T||_1 - 1)/2 and raises if the two disagree.
    """
    ev = np.linalg.eigvalsh(partial_transpose(rho, site))
    neg = -ev[ev < -NEGATIVE_CUTOFF].sum() + 0.0
    trace_form = 0.5 * (np.abs(ev).sum() - ev.sum())
    if abs(trace_form - neg) > TRACE_NORM_TOL:
        raise RuntimeError(f"negativity routes disagree: {neg} vs {trace_form}")
    return float(neg)


# --- correlators and the SU(2) route ------------------------------------------

def correlators(state, i, j):
    """(<S_i.S_j>, <(S_i.S_j)^2>) by direct operator expectation."""
    if isinstance(state, ThermalState):
        n = state.n_sites
        c1 = thermal_expectation(state, sa.pair_heisenberg(i, j, n))
        c2 = thermal_expectation(state, sa.pair_heisenberg_squared(i, j, n))
        return CorrelatorPair(c1, c2)
    psi = np.asarray(state, dtype=float)
    psi = psi / np.linalg.norm(psi)
    n = int(round(np.log(psi.size) / np.log(3)))
    p = sa.pair_heisenberg(i, j, n).matrix @ psi
    return CorrelatorPair(float(psi @ p), float(p @ p))


def correlators_from_rdm(rho):
    m = rho.matrix if isinstance(rho, TwoSiteState) else np.asarray(rho)
    return CorrelatorPair(float(np.sum(m * sa.DOT)), float(np.sum(m * sa.DOT_SQUARED)))


def su2_pt_eigenvalues(c):
    """The two possibly negative partial-transpose eigenvalues (mu1 x3, mu2 x1)."""
    return (2.0 - c.c2) / 6.0, (c.c1 + c.c2 - 1.0) / 3.0


def negativity_su2(c):
    return 0.5 * max(0.0, c.c2 - 2.0) + max(0.0, 1.0 - c.c1 - c.c2) / 3.0


def negativity_swap_form(c1, swap_expect):
    """Negativity from <S_i.S_j> and the swap expectation <P_ij>."""
    return 0.5 * max(0.0, swap_expect - c1 - 1.0) + max(0.0, -swap_expect) / 3.0


def schliemann_entangled(c):
    return c.c2 > 2.0 or c.c1 + c.c2 < 1.0


# --- SU(2)-invariant states ----------------------------------------------------

def _product(m1, m2):
    v = np.zeros(9)
    v[3 * (1 - m1) + (1 - m2)] = 1.0
    return v


def clebsch_gordan_states():
    """|S, M> for two spin-1 sites in the product basis (Condon-Shortley phases).

    Returns a dict keyed by (S, M).
    """
    p = _product
    r2, r3, r6 = sqrt(2.0), sqrt(3.0), sqrt(6.0)
    return {
        (2, 2): p(1, 1),
        (2, 1): (p(1, 0) + p(0, 1)) / r2,
        (2, 0): (p(1, -1) + 2.0 * p(0, 0) + p(-1, 1)) / r6,
        (2, -1): (p(0, -1) + p(-1, 0)) / r2,
        (2, -2): p(-1, -1),
        (1, 1): (p(1, 0) - p(0, 1)) / r2,
        (1, 0): (p(1, -1) - p(-1, 1)) / r2,
        (1, -1): (p(0, -1) - p(-1, 0)) / r2,
        (0, 0): (p(1, -1) - p(0, 0) + p(-1, 1)) / r3,
    }


def spin_projector(total_spin):
    """Projector onto total spin S of the pair, S in {0, 1, 2}."""
    states = [v for (s, _), v in clebsch_gordan_states().items() if s == total_spin]
    if not states:
        raise ArgumentError(f"total spin must be 0, 1 or 2, got {total_spin}")
    v = np.array(states).T
    return v @ v.T


def su2_state_from_coefficients(g_h):
    if not g_h.is_physical:
        raise ArgumentError(f"G={g_h.G}, H={g_h.H} is outside the physical simplex")
    rho = (g_h.G * spin_projector(0)
           + g_h.H / 3.0 * spin_projector(1)
           + (1.0 - g_h.G - g_h.H) / 5.0 * spin_projector(2))
    return TwoSiteState(rho)
