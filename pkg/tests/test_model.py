import numpy as np
import pytest

from spinone import spin_algebra as sa
from spinone.errors import ArgumentError, CapacityError
from spinone.model import ModelSpec, bonds, build_hamiltonian, build_level_projector


def eigs(op):
    return np.linalg.eigvalsh(op.matrix)


def test_spec_validation():
    with pytest.raises(ArgumentError):
        ModelSpec("bilinear_biquadratic", 3)
    with pytest.raises(ArgumentError):
        ModelSpec("bilinear", 3, gamma=0.1)
    with pytest.raises(ArgumentError):
        ModelSpec("bilinear", 1)
    with pytest.raises(ArgumentError):
        ModelSpec("ladder", 3)
    with pytest.raises(ArgumentError):
        ModelSpec("bilinear", 3, boundary="open")
    with pytest.raises(CapacityError):
        ModelSpec("bilinear", 9)
    assert ModelSpec("bb", 3, gamma=0).kind == "bilinear_biquadratic"
    assert ModelSpec("a2a", 3).kind == "all_to_all"


def test_bonds():
    assert bonds(ModelSpec("bilinear", 2)) == [(1, 2)]
    assert bonds(ModelSpec("bilinear", 3)) == [(1, 2), (1, 3), (2, 3)]
    assert bonds(ModelSpec("bilinear", 5)) == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
    assert len(bonds(ModelSpec("all_to_all", 6))) == 15


def test_two_site_spectrum():
    ev = eigs(build_hamiltonian(ModelSpec("bilinear", 2)))
    assert np.allclose(ev, [-2] + [-1] * 3 + [1] * 5, atol=1e-12)


@pytest.mark.parametrize("gamma", [-1.0, -0.3, 0.0, 0.2])
def test_two_site_bb_ground_energy_below_crossing(gamma):
    ev = eigs(build_hamiltonian(ModelSpec("bb", 2, gamma=gamma)))
    assert ev[0] == pytest.approx(-2 + 4 * gamma, abs=1e-12)


@pytest.mark.parametrize("n", range(2, 7))
def test_all_to_all_ground_energy(n):
    assert eigs(build_hamiltonian(ModelSpec("all_to_all", n)))[0] == pytest.approx(-n, abs=1e-10)


def test_all_to_all_equals_ring_for_small_n():
    for n in (2, 3):
        a = build_hamiltonian(ModelSpec("all_to_all", n)).matrix
        b = build_hamiltonian(ModelSpec("bilinear", n)).matrix
        assert np.allclose(a, b)


def test_all_to_all_is_total_spin_function():
    n = 4
    h = build_hamiltonian(ModelSpec("all_to_all", n)).matrix
    s2 = sa.total_spin_squared(n).matrix
    assert np.allclose(h, 0.5 * s2 - n * np.eye(3 ** n), atol=1e-12)


@pytest.mark.parametrize("spec", [
    ModelSpec("bilinear", 4),
    ModelSpec("bb", 4, gamma=0.37),
    ModelSpec("bb", 3, gamma=-0.8, J=1.3),
    ModelSpec("all_to_all", 4),
])
def test_su2_invariance(spec):
    h = build_hamiltonian(spec).matrix
    for axis in "xyz":
        s = sa.total_spin_component(axis, spec.n_sites).matrix
        assert np.max(np.abs(h @ s - s @ h)) < 1e-12


@pytest.mark.parametrize("spec", [ModelSpec("bilinear", 5), ModelSpec("bb", 4, gamma=0.6)])
def test_translation_invariance(spec):
    h = build_hamiltonian(spec).matrix
    t = sa.site_shift(spec.n_sites)
    assert np.max(np.abs(t @ h @ t.T - h)) < 1e-12


def test_level_projector():
    h = build_hamiltonian(ModelSpec("bilinear", 2))
    for e_k, dim in ((-1.0, 3), (-2.0, 1), (1.0, 5)):
        ev = eigs(build_level_projector(h, e_k))
        assert ev[0] > -1e-12
        assert np.sum(ev < 1e-10) == dim
    assert eigs(build_level_projector(h, 0.0))[0] > 0.5
