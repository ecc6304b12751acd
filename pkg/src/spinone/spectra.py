"""Exact diagonalization blocked by total S^z."""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import spin_algebra as sa
from .errors import ArgumentError

DEGENERACY_TOL = 1e-8


def thread_count():
    """Worker cap from SPIN1_THREADS (default 1: serial)."""
    raw = os.environ.get("SPIN1_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ArgumentError(f"SPIN1_THREADS must be an integer, got {raw!r}") from None


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues, orthonormal eigenvectors (columns) and S^z labels."""

    n_sites: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)
    sector_labels: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _frozen(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", _frozen(self.eigenvectors))
        labels = np.asarray(self.sector_labels, dtype=int)
        labels.setflags(write=False)
        object.__setattr__(self, "sector_labels", labels)

    @property
    def dim(self):
        return len(self.eigenvalues)

    def level_tolerance(self, tol=DEGENERACY_TOL):
        return tol * max(1.0, abs(float(self.eigenvalues[0])))

    def levels(self, tol=DEGENERACY_TOL):
        """Group eigenvalue indices into degenerate levels.

        Neighbouring eigenvalues closer than ``tol * max(1, |E_min|)`` share a
        level.  Returns a list of index arrays, lowest level first.
        """
        e = self.eigenvalues
        breaks = np.flatnonzero(np.diff(e) > self.level_tolerance(tol)) + 1
        return np.split(np.arange(len(e)), breaks)


@dataclass(frozen=True)
class GroundStateInfo:
    """One energy level: its energy, degeneracy and an orthonormal basis.

    ``indices`` locate the level inside ``spectral`` so that mixtures can be
    built without re-diagonalizing.
    """

    energy: float
    degeneracy: int
    basis: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    spectral: Optional[SpectralDecomposition] = field(default=None, repr=False, compare=False)


def _eigh_block(h, idx):
    vals, vecs = np.linalg.eigh(h[np.ix_(idx, idx)])
    return vals, vecs


def diagonalize(h, blocked=True, threads=None):
    """Full spectrum of a real symmetric operator.

    With ``blocked=True`` (default) the matrix is split into total-S^z sectors,
    each sector is diagonalized on its own and the results are merged.  The
    operator must conserve S^z in that case; a leak between sectors raises.
    """
    m = h.matrix
    if h.antisymmetric or np.max(np.abs(m - m.T), initial=0.0) > 1e-12 * max(1.0, np.max(np.abs(m))):
        raise ArgumentError("diagonalize needs a real symmetric operator")
    dim = h.dim
    sz = sa.magnetization(h.n_sites)
    if not blocked:
        vals, vecs = np.linalg.eigh(m)
        labels = np.rint((sz[:, None] * vecs ** 2).sum(axis=0)).astype(int)
        return SpectralDecomposition(h.n_sites, vals, vecs, labels)

    sectors = [np.flatnonzero(sz == q) for q in np.unique(sz)]
    leak = 0.0
    for idx in sectors:
        mask = np.ones(dim, dtype=bool)
        mask[idx] = False
        if mask.any():
            leak = max(leak, np.max(np.abs(m[np.ix_(idx, np.flatnonzero(mask))])))
    if leak > 1e-12:
        raise ArgumentError("operator mixes S^z sectors; use blocked=False")

    workers = threads or thread_count()
    if workers > 1 and len(sectors) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda idx: _eigh_block(m, idx), sectors))
    else:
        results = [_eigh_block(m, idx) for idx in sectors]

    vals = np.empty(dim)
    vecs = np.zeros((dim, dim))
    labels = np.empty(dim, dtype=int)
    col = 0
    for idx, (bvals, bvecs) in zip(sectors, results):
        k = len(idx)
        vals[col:col + k] = bvals
        vecs[idx, col:col + k] = bvecs
        labels[col:col + k] = sz[idx[0]]
        col += k
    order = np.argsort(vals, kind="stable")
    return SpectralDecomposition(h.n_sites, vals[order], vecs[:, order], labels[order])


def energy_level(spec, k=0, degeneracy_tol=DEGENERACY_TOL):
    """The k-th distinct energy level (k=0 is the ground level)."""
    if degeneracy_tol <= 0:
        raise ArgumentError("degeneracy_tol must be positive")
    levels = spec.levels(degeneracy_tol)
    if not 0 <= k < len(levels):
        raise ArgumentError(f"level {k} out of range (spectrum has {len(levels)} levels)")
    idx = levels[k]
    return GroundStateInfo(
        energy=float(spec.eigenvalues[idx].mean()),
        degeneracy=len(idx),
        basis=spec.eigenvectors[:, idx],
        indices=idx,
        spectral=spec,
    )


def ground_state(spec, degeneracy_tol=DEGENERACY_TOL):
    gs = energy_level(spec, 0, degeneracy_tol)
    # report the exact minimum rather than the level mean
    return GroundStateInfo(float(spec.eigenvalues[0]), gs.degeneracy, gs.basis, gs.indices, spec)


def spectrum_rows(spec):
    """Rows (index, energy, sz_sector) for CSV export."""
    return [(k, float(e), int(q)) for k, (e, q) in enumerate(zip(spec.eigenvalues, spec.sector_labels))]
