import itertools
import math

import numpy as np
import pytest

from qbatt import model, observe
from qbatt.errors import NotHermitian


def random_density(rng, n=4):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def haar_unitary(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bell_state():
    v = np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2)
    return np.outer(v, v.conj())


def test_reduce_battery_product_states():
    eg = model.StateSpec("eg").density_matrix()
    assert np.linalg.norm(observe.reduce_battery(eg) - np.diag([0, 1])) < 1e-15
    ee = np.zeros((4, 4), dtype=complex)
    ee[0, 0] = 1.0
    assert np.linalg.norm(observe.reduce_battery(ee) - np.diag([1, 0])) < 1e-15


def test_reduce_battery_bell_state():
    out = observe.reduce_battery(bell_state())
    assert np.linalg.norm(out - 0.5 * np.eye(2)) < 1e-15


def test_reduce_battery_is_trace_preserving_positive():
    rng = np.random.default_rng(60)
    for _ in range(50):
        rho = random_density(rng)
        red = observe.reduce_battery(rho)
        assert abs(np.trace(red) - 1.0) < 1e-12
        assert np.linalg.norm(red - red.conj().T) < 1e-12
        assert np.linalg.eigvalsh(red).min() > -1e-12


def test_passive_energy_fixed_point():
    # ground-heavy diagonal state is already passive
    h = np.diag([1.0, 0.0]).astype(complex)
    rho = np.diag([0.2, 0.8]).astype(complex)
    assert abs(observe.passive_energy(rho, h)
               - np.trace(h @ rho).real) < 1e-12


def test_passive_energy_excited_state():
    h = np.diag([1.0, 0.0]).astype(complex)
    rho = np.diag([1.0, 0.0]).astype(complex)  # fully excited
    assert abs(observe.passive_energy(rho, h)) < 1e-12


def test_passive_energy_rejects_non_hermitian():
    rho = np.diag([0.5, 0.5]).astype(complex)
    h = np.array([[0.0, 1.0], [0.0, 1.0]], dtype=complex)
    with pytest.raises(NotHermitian):
        observe.passive_energy(rho, h)


def test_passive_energy_unitary_minimization_2x2():
    """No unitary reshuffling reaches below the passive energy."""
    rng = np.random.default_rng(61)
    h = np.diag([1.0, 0.0]).astype(complex)
    for _ in range(20):
        rho = random_density(rng, 2)
        floor = observe.passive_energy(rho, h)
        best = min(
            np.trace(h @ (u := haar_unitary(rng, 2)) @ rho
                     @ u.conj().T).real
            for _ in range(200))
        assert best >= floor - 1e-9
        # the diagonalizing permutation attains the floor
        w = np.linalg.eigvalsh(rho)
        attained = w[::-1] @ np.linalg.eigvalsh(h)
        assert abs(attained - floor) < 1e-12


def test_passive_energy_permutation_oracle_4x4():
    # for commuting bases the minimum is over eigenvalue pairings
    rng = np.random.default_rng(62)
    h4 = np.diag([0.0, 1.0, 1.0, 2.0]).astype(complex)
    for _ in range(10):
        rho = random_density(rng)
        floor = observe.passive_energy(rho, h4)
        r = np.linalg.eigvalsh(rho)
        e = np.linalg.eigvalsh(h4)
        best = min(sum(r[list(perm)] * e)
                   for perm in itertools.permutations(range(4)))
        assert abs(best - floor) < 1e-10


def test_battery_metrics_pure_excited():
    ee = np.zeros((4, 4), dtype=complex)
    ee[0, 0] = 1.0
    m = observe.battery_metrics(ee, 1.0)
    assert abs(m.energy - 1.0) < 1e-12
    assert abs(m.ergotropy - 1.0) < 1e-12
    assert m.efficiency == 1.0
    assert abs(m.n_pop - 1.0) < 1e-12


def test_battery_metrics_maximally_mixed():
    m = observe.battery_metrics(np.eye(4, dtype=complex) / 4, 1.0)
    assert abs(m.energy - 0.5) < 1e-12
    assert abs(m.ergotropy) < 1e-12
    assert m.efficiency == 0.0


def test_battery_metrics_ground_state():
    gg = np.zeros((4, 4), dtype=complex)
    gg[3, 3] = 1.0
    m = observe.battery_metrics(gg, 1.0)
    assert abs(m.energy) < 1e-12
    assert m.efficiency == 0.0  # defined as 0 at zero energy


def test_battery_metrics_closed_form_vs_passive():
    """Ergotropy closed form against energy minus passive energy of the
    reduced battery state, over many random two-qubit states."""
    rng = np.random.default_rng(63)
    omega = 1.0
    h = np.diag([omega, 0.0]).astype(complex)
    for _ in range(1000):
        rho = random_density(rng)
        m = observe.battery_metrics(rho, omega)
        red = observe.reduce_battery(rho)
        direct = np.trace(h @ red).real - observe.passive_energy(red, h)
        assert abs(m.ergotropy - direct) < 1e-9
        assert abs(m.energy - np.trace(h @ red).real) < 1e-10
        assert -1e-9 <= m.ergotropy <= m.energy + 1e-9
        assert 0.0 <= m.efficiency <= 1.0


def test_battery_metrics_omega_cancels_in_efficiency():
    rng = np.random.default_rng(64)
    for _ in range(20):
        rho = random_density(rng)
        effs = [observe.battery_metrics(rho, w).efficiency
                for w in (0.5, 1.0, 2.0)]
        assert max(effs) - min(effs) < 1e-12


def test_concurrence_product_state():
    assert observe.concurrence(model.StateSpec("eg").density_matrix()) == 0.0
    assert observe.concurrence(np.eye(4, dtype=complex) / 4) == 0.0


def test_concurrence_bell_state():
    # eigenvalue dust eps turns into sqrt(eps) through the Wootters formula
    assert abs(observe.concurrence(bell_state()) - 1.0) < 1e-7


def test_concurrence_werner_family():
    # rho = p |Bell><Bell| + (1-p) I/4 has C = max(0, (3p-1)/2)
    bell = bell_state()
    mix = np.eye(4, dtype=complex) / 4
    for p in (0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0):
        rho = p * bell + (1 - p) * mix
        expect = max(0.0, (3 * p - 1) / 2)
        assert abs(observe.concurrence(rho) - expect) < 1e-7


def test_concurrence_local_unitary_invariance():
    rng = np.random.default_rng(65)
    for _ in range(30):
        rho = random_density(rng)
        c0 = observe.concurrence(rho)
        u = np.kron(haar_unitary(rng, 2), haar_unitary(rng, 2))
        c1 = observe.concurrence(u @ rho @ u.conj().T)
        assert abs(c0 - c1) < 1e-9
        assert 0.0 <= c0 <= 1.0


def test_concurrence_u1_phase_invariance():
    rng = np.random.default_rng(66)
    rho = random_density(rng)
    c0 = observe.concurrence(rho)
    for tau in (0.3, 2.0, 137.0):
        u1 = model.rotating_phase(tau)
        assert abs(observe.concurrence(u1 @ rho @ u1.conj().T) - c0) < 1e-9


def test_tomogram_identity():
    t = observe.tomogram(np.eye(4, dtype=complex) / 4)
    assert np.linalg.norm(t.magnitudes - np.eye(4) / 4) < 1e-15
    labels = t.labeled()
    assert len(labels) == 16
    assert abs(labels["t_ee_ee"] - 0.25) < 1e-15
    assert labels["t_eg_ge"] == 0.0


def test_tomogram_u1_invariance():
    rng = np.random.default_rng(67)
    rho = random_density(rng)
    t0 = observe.tomogram(rho).magnitudes
    for tau in (0.5, 3.3, 2000.0):
        u1 = model.rotating_phase(tau)
        t1 = observe.tomogram(u1 @ rho @ u1.conj().T).magnitudes
        assert np.linalg.norm(t0 - t1) < 1e-12


def test_tomogram_diagonal_sums_to_one():
    rng = np.random.default_rng(68)
    for _ in range(20):
        t = observe.tomogram(random_density(rng))
        assert abs(np.trace(t.magnitudes) - 1.0) < 1e-9
