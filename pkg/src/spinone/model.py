"""Hamiltonians of periodic spin-1 rings and the all-to-all model."""

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import spin_algebra as sa
from .errors import ArgumentError

BILINEAR = "bilinear"
BILINEAR_BIQUADRATIC = "bilinear_biquadratic"
ALL_TO_ALL = "all_to_all"
KINDS = (BILINEAR, BILINEAR_BIQUADRATIC, ALL_TO_ALL)

ALIASES = {
    "bilinear": BILINEAR, "h1": BILINEAR,
    "bilinear_biquadratic": BILINEAR_BIQUADRATIC, "bb": BILINEAR_BIQUADRATIC,
    "bilinear-biquadratic": BILINEAR_BIQUADRATIC, "h2": BILINEAR_BIQUADRATIC,
    "all_to_all": ALL_TO_ALL, "all-to-all": ALL_TO_ALL, "a2a": ALL_TO_ALL, "h3": ALL_TO_ALL,
}


def canonical_kind(name):
    try:
        return ALIASES[str(name).lower()]
    except KeyError:
        raise ArgumentError(f"unknown model {name!r}; choose from {sorted(ALIASES)}") from None


@dataclass(frozen=True)
class ModelSpec:
    """Model parameters.

    ``gamma`` is required for the bilinear-biquadratic ring and must be None
    otherwise.  Only periodic boundaries are supported.
    """

    kind: str
    n_sites: int
    J: float = 1.0
    gamma: Optional[float] = None
    boundary: str = "periodic"

    def __post_init__(self):
        object.__setattr__(self, "kind", canonical_kind(self.kind))
        if int(self.n_sites) != self.n_sites or self.n_sites < 2:
            raise ArgumentError(f"n_sites must be an integer >= 2, got {self.n_sites!r}")
        sa.check_sites(self.n_sites)
        object.__setattr__(self, "n_sites", int(self.n_sites))
        object.__setattr__(self, "J", float(self.J))
        if self.kind == BILINEAR_BIQUADRATIC:
            if self.gamma is None:
                raise ArgumentError("bilinear_biquadratic model needs gamma")
            object.__setattr__(self, "gamma", float(self.gamma))
        elif self.gamma is not None:
            raise ArgumentError(f"gamma is only defined for {BILINEAR_BIQUADRATIC}")
        if self.boundary != "periodic":
            raise ArgumentError("only periodic boundary conditions are supported")

    def with_(self, **changes):
        return replace(self, **changes)

    @property
    def bonds(self):
        return bonds(self)


def bonds(spec):
    """Unordered interacting pairs, each listed once.

    A two-site ring therefore has the single bond (1, 2).
    """
    n = spec.n_sites
    if spec.kind == ALL_TO_ALL:
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    ring = {tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)}
    return sorted(ring)


def build_hamiltonian(spec):
    n = spec.n_sites
    local = spec.J * sa.DOT
    if spec.kind == BILINEAR_BIQUADRATIC:
        local = local + spec.gamma * sa.DOT_SQUARED
    h = np.zeros((3 ** n, 3 ** n))
    for i, j in bonds(spec):
        h += sa.embed_pair(local, i, j, n).matrix
    return sa.DenseOperator(n, h)


def coupling_operators(spec):
    """Derivatives of H with respect to J and gamma, as (dH/dJ, dH/dgamma).

    dH/dgamma is None unless the model is bilinear-biquadratic.
    """
    n = spec.n_sites
    d_j = np.zeros((3 ** n, 3 ** n))
    d_g = np.zeros_like(d_j) if spec.kind == BILINEAR_BIQUADRATIC else None
    for i, j in bonds(spec):
        d_j += sa.embed_pair(sa.DOT, i, j, n).matrix
        if d_g is not None:
            d_g += sa.embed_pair(sa.DOT_SQUARED, i, j, n).matrix
    return sa.DenseOperator(n, d_j), (None if d_g is None else sa.DenseOperator(n, d_g))


def build_level_projector(h, e_k):
    """(H - e_k)^2, whose ground space is the E = e_k eigenspace of H."""
    shifted = h.matrix - float(e_k) * np.eye(h.dim)
    sq = shifted @ shifted
    return sa.DenseOperator(h.n_sites, 0.5 * (sq + sq.T))
