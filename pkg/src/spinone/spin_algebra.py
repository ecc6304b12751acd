"""
Spin-1 operators on N-site product spaces.

Local basis: index n in {0, 1, 2} labels |s=1, m=1-n>, so n=0 is m=+1.
Global index is the big-endian base-3 number n_1 n_2 ... n_N (site 1 most
significant).  Sites are 1-based in the public API.

Everything is kept real.  S.S is written as Sz Sz + (S+ S- + S- S+)/2, and
the y component of the total spin is returned as i*S_y, which is a real
antisymmetric matrix.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, CapacityError

MAX_SITES = 8
SYMMETRY_TOL = 1e-12

# single-site matrices in the (m=+1, 0, -1) ordering
SZ = np.diag([1.0, 0.0, -1.0])
SPLUS = np.array([[0.0, np.sqrt(2.0), 0.0],
                  [0.0, 0.0, np.sqrt(2.0)],
                  [0.0, 0.0, 0.0]])
SMINUS = SPLUS.T.copy()
SX = 0.5 * (SPLUS + SMINUS)
ISY = 0.5 * (SPLUS - SMINUS)  # i * S_y, real antisymmetric
IDENTITY3 = np.eye(3)

# two-site S_i.S_j and its square in the 9-dim product basis |n_i n_j>
DOT = np.kron(SZ, SZ) + 0.5 * (np.kron(SPLUS, SMINUS) + np.kron(SMINUS, SPLUS))
DOT_SQUARED = DOT @ DOT
SWAP = DOT + DOT_SQUARED - np.eye(9)


@dataclass(frozen=True)
class DenseOperator:
    """Real operator on the 3**n_sites product space.

    ``antisymmetric`` marks i*S_y-type operators, which are real but
    antisymmetric; every other operator is checked for symmetry.
    """

    n_sites: int
    matrix: np.ndarray = field(repr=False)
    antisymmetric: bool = False

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        dim = 3 ** self.n_sites
        if m.shape != (dim, dim):
            raise ArgumentError(
                f"matrix shape {m.shape} does not match 3**{self.n_sites}")
        sign = -1.0 if self.antisymmetric else 1.0
        if m.size and np.max(np.abs(m - sign * m.T)) > SYMMETRY_TOL * max(1.0, np.max(np.abs(m))):
            kind = "antisymmetric" if self.antisymmetric else "symmetric"
            raise ArgumentError(f"operator is not {kind}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return 3 ** self.n_sites

    def _check(self, other):
        if not isinstance(other, DenseOperator) or other.n_sites != self.n_sites:
            raise ArgumentError("operators act on different spaces")
        if other.antisymmetric != self.antisymmetric:
            raise ArgumentError("cannot mix symmetric and antisymmetric operators")

    def __add__(self, other):
        self._check(other)
        return DenseOperator(self.n_sites, self.matrix + other.matrix, self.antisymmetric)

    def __sub__(self, other):
        self._check(other)
        return DenseOperator(self.n_sites, self.matrix - other.matrix, self.antisymmetric)

    def __mul__(self, scalar):
        return DenseOperator(self.n_sites, float(scalar) * self.matrix, self.antisymmetric)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0


def check_sites(n_sites):
    if int(n_sites) != n_sites or n_sites < 1:
        raise ArgumentError(f"n_sites must be a positive integer, got {n_sites!r}")
    if n_sites > MAX_SITES:
        raise CapacityError(f"n_sites={n_sites} exceeds the dense limit of {MAX_SITES}")
    return int(n_sites)


def check_pair(i, j, n_sites):
    if not (1 <= i < j <= n_sites):
        raise ArgumentError(f"invalid site pair ({i}, {j}) for {n_sites} sites")


def basis_digits(n_sites):
    """Digit table of shape (3**n_sites, n_sites); row k is the base-3 expansion of k."""
    n_sites = check_sites(n_sites)
    dim = 3 ** n_sites
    powers = 3 ** np.arange(n_sites - 1, -1, -1)
    return (np.arange(dim)[:, None] // powers[None, :]) % 3


def basis_index(digits):
    """Global index of a digit string such as ``"012"`` or ``[0, 1, 2]``."""
    digits = [int(d) for d in digits]
    if any(d not in (0, 1, 2) for d in digits):
        raise ArgumentError(f"digits must be 0, 1 or 2: {digits}")
    idx = 0
    for d in digits:
        idx = 3 * idx + d
    return idx


def product_state(digits):
    """Normalized product vector for a digit string, e.g. ``product_state("012")``."""
    vec = np.zeros(3 ** len(digits))
    vec[basis_index(digits)] = 1.0
    return vec


def magnetization(n_sites):
    """Total S^z of each basis state (sum of 1 - n over sites)."""
    return (1 - basis_digits(n_sites)).sum(axis=1)


def _embed(local, sites, n_sites):
    # local acts on the listed 0-based sites, ordered as given; identity elsewhere
    k = len(sites)
    dim = 3 ** n_sites
    digits = basis_digits(n_sites)
    strides = 3 ** (n_sites - 1 - np.asarray(sites))
    tensor = local.reshape((3,) * (2 * k))
    out = np.zeros((dim, dim))
    for idx in zip(*np.nonzero(tensor)):
        row, col = np.array(idx[:k]), np.array(idx[k:])
        src = np.flatnonzero(np.all(digits[:, sites] == col, axis=1))
        dst = src + int(np.dot(row - col, strides))
        out[dst, src] += tensor[idx]
    return out


def embed_pair(local9, i, j, n_sites):
    """Embed a 9x9 operator on sites (i, j), 1-based, into the N-site space."""
    n_sites = check_sites(n_sites)
    check_pair(i, j, n_sites)
    local9 = np.asarray(local9, dtype=float)
    if local9.shape != (9, 9):
        raise ArgumentError("two-site operator must be 9x9")
    return DenseOperator(n_sites, _embed(local9, [i - 1, j - 1], n_sites))


def embed_site(local3, i, n_sites, antisymmetric=False):
    n_sites = check_sites(n_sites)
    if not 1 <= i <= n_sites:
        raise ArgumentError(f"invalid site {i} for {n_sites} sites")
    return DenseOperator(n_sites, _embed(np.asarray(local3, dtype=float), [i - 1], n_sites),
                         antisymmetric)


def pair_heisenberg(i, j, n_sites):
    """S_i . S_j on an N-site chain."""
    return embed_pair(DOT, i, j, n_sites)


def pair_heisenberg_squared(i, j, n_sites):
    """(S_i . S_j)^2; identical to squaring the embedded operator."""
    return embed_pair(DOT_SQUARED, i, j, n_sites)


def pair_swap(i, j, n_sites):
    """Swap of sites i and j, built as S.S + (S.S)^2 - 1."""
    return embed_pair(SWAP, i, j, n_sites)


def identity(n_sites):
    n_sites = check_sites(n_sites)
    return DenseOperator(n_sites, np.eye(3 ** n_sites))


def total_spin_component(axis, n_sites):
    """Sum over sites of one spin component.

    For ``axis="y"`` the returned operator is i*S_y^total (real, antisymmetric,
    flagged via ``antisymmetric=True``).
    """
    n_sites = check_sites(n_sites)
    if axis == "z":
        return DenseOperator(n_sites, np.diag(magnetization(n_sites).astype(float)))
    local, anti = {"x": (SX, False), "y": (ISY, True)}.get(axis, (None, None))
    if local is None:
        raise ArgumentError(f"axis must be x, y or z, got {axis!r}")
    total = np.zeros((3 ** n_sites,) * 2)
    for site in range(n_sites):
        total += _embed(local, [site], n_sites)
    return DenseOperator(n_sites, total, anti)


def total_spin_squared(n_sites):
    """(sum_i S_i)^2 = 2N + 2 sum_{i<j} S_i.S_j."""
    n_sites = check_sites(n_sites)
    total = 2.0 * n_sites * np.eye(3 ** n_sites)
    for i in range(1, n_sites + 1):
        for j in range(i + 1, n_sites + 1):
            total += 2.0 * pair_heisenberg(i, j, n_sites).matrix
    return DenseOperator(n_sites, total)


def site_shift(n_sites):
    """Permutation matrix of the cyclic shift i -> i+1 on the ring."""
    digits = basis_digits(n_sites)
    shifted = np.roll(digits, 1, axis=1)
    powers = 3 ** np.arange(n_sites - 1, -1, -1)
    perm = np.zeros((3 ** n_sites,) * 2)
    perm[shifted @ powers, np.arange(3 ** n_sites)] = 1.0
    return perm
