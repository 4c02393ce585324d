"""Battery figures of merit: reduced state, passive energy, ergotropy,
efficiency, Wootters concurrence, and tomography export.

All inputs are bare-basis density matrices in the fixed order
|ee>, |eg>, |ge>, |gg>.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import matcore

# sigma_y x sigma_y is real in this basis; used by the spin-flip transform
_SYSY = np.array([
    [0, 0, 0, -1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
], dtype=np.complex128)

_BASIS_LABELS = ("ee", "eg", "ge", "gg")


@dataclass(frozen=True)
class BatteryMetrics:
    """Mean energy, extractable energy, their ratio, and the two moments
    they are built from: n_pop = <sigma_z> of the battery and the summed
    coherence coh = M12 + M34."""

    energy: float
    ergotropy: float
    efficiency: float
    n_pop: float
    coh: complex


@dataclass(frozen=True)
class Tomogram:
    """Entrywise magnitudes |M_ij| with bare-basis labels."""

    magnitudes: np.ndarray

    def labeled(self):
        out = {}
        for i in range(4):
            for j in range(4):
                out[f"t_{_BASIS_LABELS[i]}_{_BASIS_LABELS[j]}"] = float(
                    self.magnitudes[i, j])
        return out


def reduce_battery(rho_bare):
    """Partial trace over the charger, basis {|e>, |g>} for the battery."""
    rho = np.asarray(rho_bare, dtype=np.complex128)
    return np.array([
        [rho[0, 0] + rho[2, 2], rho[0, 1] + rho[2, 3]],
        [rho[1, 0] + rho[3, 2], rho[1, 1] + rho[3, 3]],
    ])


def passive_energy(rho, h):
    """Minimum mean energy over unitary reshuffling: state populations
    descending against energy levels ascending."""
    r = matcore.eig_hermitian(rho).values.real[::-1]
    e = matcore.eig_hermitian(h).values.real
    return float(r @ e)


def battery_metrics(rho_bare, omega: float):
    """Two-level closed forms for energy, ergotropy and efficiency."""
    rho = np.asarray(rho_bare, dtype=np.complex128)
    n = float((rho[0, 0] + rho[2, 2] - rho[1, 1] - rho[3, 3]).real)
    coh = complex(rho[0, 1] + rho[2, 3])
    energy = 0.5 * omega * (n + 1.0)
    ergotropy = 0.5 * omega * (math.sqrt(n * n + 4.0 * abs(coh) ** 2) + n)
    if energy <= 1e-12:
        efficiency = 0.0
    else:
        efficiency = ergotropy / energy
        # numerically ergotropy can overshoot energy by rounding dust
        if 1.0 < efficiency <= 1.0 + 1e-9:
            efficiency = 1.0
        if -1e-9 <= efficiency < 0.0:
            efficiency = 0.0
    return BatteryMetrics(energy=energy, ergotropy=ergotropy,
                          efficiency=efficiency, n_pop=n, coh=coh)


def concurrence(rho_bare):
    """Wootters concurrence of the two-qubit state."""
    rho = np.asarray(rho_bare, dtype=np.complex128)
    r = rho @ _SYSY @ rho.conj() @ _SYSY
    w = matcore.eig_general(r).values.real
    w = np.sqrt(np.clip(w, 0.0, None))
    w = np.sort(w)[::-1]
    c = w[0] - w[1] - w[2] - w[3]
    return float(min(max(c, 0.0), 1.0))


def tomogram(rho_bare):
    rho = np.asarray(rho_bare, dtype=np.complex128)
    return Tomogram(magnitudes=np.abs(rho))
