"""System parameters, rotating-frame Hamiltonian, analytic and numeric
diagonalization, and frame transforms for the driven charger-battery pair.

Basis order is fixed globally as |ee>, |eg>, |ge>, |gg> (charger first).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .errors import ConfigError, DegenerateSpectrum, ResonanceRequired

_RESONANCE_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """System parameters in units of the coupling (lambda = 1 by default).

    delta1, delta2 are the charger/battery detunings from the drive;
    drive is the driving strength F; omega_d is kept for frame bookkeeping
    and bath-frequency evaluation; omega_battery sets the battery energy
    scale (it cancels in the efficiency ratio).
    """

    delta1: float = 0.0
    delta2: float = 0.0
    coupling: float = 1.0
    drive: float = 0.5
    omega_d: float = 5.0
    omega_battery: float = 1.0

    def __post_init__(self):
        if not self.coupling > 0:
            raise ConfigError(f"coupling must be positive, got {self.coupling}")
        if self.drive < 0:
            raise ConfigError(f"drive must be nonnegative, got {self.drive}")
        if not self.omega_battery > 0:
            raise ConfigError(
                f"omega_battery must be positive, got {self.omega_battery}")

    @property
    def delta(self):
        """Detuning difference delta1 - delta2."""
        return self.delta1 - self.delta2

    @property
    def delta_bar(self):
        """Mean detuning (delta1 + delta2)/2."""
        return 0.5 * (self.delta1 + self.delta2)


@dataclass(frozen=True)
class EigenSystem:
    """Energies (descending) and the 4x4 transformation u whose rows are the
    eigenvectors expanded in the bare basis: |E_i> = sum_b u[i,b] |b>."""

    energies: np.ndarray
    u: np.ndarray


@dataclass(frozen=True)
class StateSpec:
    """Initial pure state of the pair.

    kind is one of 'eg', 'ge', 'bloch', 'vector'. The bloch family is
    cos(theta)|eg> + sin(theta) e^{i phi}|ge>. 'vector' carries explicit
    bare-basis amplitudes, normalized on construction. source keeps the
    original config token for metadata round-trips.
    """

    kind: str
    theta: float = 0.0
    phi: float = 0.0
    vector: np.ndarray | None = None
    source: str = ""

    def __post_init__(self):
        if self.kind not in ("eg", "ge", "bloch", "vector"):
            raise ConfigError(f"unknown state kind {self.kind!r}")
        if self.kind == "vector":
            v = np.asarray(self.vector, dtype=np.complex128).reshape(-1)
            if v.shape != (4,):
                raise ConfigError("explicit state vector must have 4 amplitudes")
            nrm = float(np.linalg.norm(v))
            if nrm < 1e-12:
                raise ConfigError("explicit state vector must be nonzero")
            object.__setattr__(self, "vector", v / nrm)
        if not self.source:
            object.__setattr__(self, "source", self.kind)

    def amplitudes(self):
        """Bare-basis amplitudes (|ee>, |eg>, |ge>, |gg>), unit norm."""
        if self.kind == "eg":
            return np.array([0, 1, 0, 0], dtype=np.complex128)
        if self.kind == "ge":
            return np.array([0, 0, 1, 0], dtype=np.complex128)
        if self.kind == "bloch":
            return np.array(
                [0.0, math.cos(self.theta),
                 math.sin(self.theta) * np.exp(1j * self.phi), 0.0],
                dtype=np.complex128)
        return self.vector.copy()

    def density_matrix(self):
        c = self.amplitudes()
        return np.outer(c, c.conj())


def symmetric_state():
    """(|eg> + |ge>)/sqrt(2) as a bloch state."""
    return StateSpec("bloch", theta=math.pi / 4, phi=0.0, source="sym")


def hamiltonian(p: ModelParams):
    """Rotating-frame system Hamiltonian, 4x4 Hermitian.

    (d1/2) sz x I + (d2/2) I x sz + coupling (s+ x s- + s- x s+)
    + (drive/2) (s+ x I + s- x I).
    """
    d1, d2 = p.delta1, p.delta2
    lam, f = p.coupling, p.drive
    h = np.zeros((4, 4), dtype=np.complex128)
    h[0, 0] = 0.5 * (d1 + d2)
    h[1, 1] = 0.5 * (d1 - d2)
    h[2, 2] = -0.5 * (d1 - d2)
    h[3, 3] = -0.5 * (d1 + d2)
    h[1, 2] = h[2, 1] = lam
    # charger drive: flips qubit 1 regardless of qubit 2
    h[0, 2] = h[2, 0] = 0.5 * f
    h[1, 3] = h[3, 1] = 0.5 * f
    return h


def resonant_frequencies(p: ModelParams):
    """(omega_plus, omega_minus, m) for the resonant closed forms."""
    lam, f = p.coupling, p.drive
    m = math.hypot(lam, f)
    return 0.5 * (m + lam), 0.5 * (m - lam), m


def diagonalize_resonant(p: ModelParams):
    """Closed-form eigensystem at delta1 = delta2 = 0.

    Energies are (w+, w-, -w-, -w+) with w_pm = (sqrt(l^2+F^2) +- l)/2.
    """
    if abs(p.delta1) > _RESONANCE_TOL or abs(p.delta2) > _RESONANCE_TOL:
        raise ResonanceRequired(
            f"closed forms need delta1 = delta2 = 0, got "
            f"({p.delta1}, {p.delta2})")
    lam, f = p.coupling, p.drive
    wp, wm, m = resonant_frequencies(p)
    gp = math.sqrt(f * f + lam * lam + lam * m)
    gm = math.sqrt(f * f + lam * lam - lam * m)
    energies = np.array([wp, wm, -wm, -wp])
    u = np.array([
        [f / (2 * gp),  wp / gp,  wp / gp, f / (2 * gp)],
        [-f / (2 * gm), wm / gm, -wm / gm, f / (2 * gm)],
        [f / (2 * gm), -wm / gm, -wm / gm, f / (2 * gm)],
        [-f / (2 * gp), -wp / gp, wp / gp, f / (2 * gp)],
    ], dtype=np.complex128)
    return EigenSystem(energies=energies, u=u)


def diagonalize_general(p: ModelParams):
    """Numeric eigensystem for arbitrary detunings.

    Energies descending; each row's largest-magnitude component is made
    real positive so coefficients are reproducible across runs.
    """
    h = hamiltonian(p)
    pairs = matcore.eig_hermitian(h)
    w = pairs.values.real
    v = pairs.vectors
    order = np.argsort(w)[::-1]
    w = w[order]
    v = v[:, order]
    scale = max(1.0, float(np.max(np.abs(w))))
    if np.min(-np.diff(w)) < 1e-10 * scale:
        raise DegenerateSpectrum(
            f"adjacent energies within 1e-10, spectrum {w}: "
            "row phase convention is ambiguous")
    u = v.T.copy()
    for i in range(4):
        # first entry within tolerance of the max magnitude; exact argmax
        # would break ties on eigensolver dust and flip signs between
        # nearby parameter points
        mags = np.abs(u[i])
        k = int(np.argmax(mags >= (1.0 - 1e-9) * mags.max()))
        z = u[i, k]
        u[i] *= z.conjugate() / abs(z)
    return EigenSystem(energies=w, u=u)


def to_eigen_basis(state: StateSpec, es: EigenSystem):
    """Eigen-basis amplitudes a_i = sum_b u[i,b] c_b."""
    return es.u @ state.amplitudes()


def eigen_density_matrix(state: StateSpec, es: EigenSystem):
    a = to_eigen_basis(state, es)
    return np.outer(a, a.conj())


def rotating_phase(tau: float):
    """U1(tau) = diag(e^{2i tau}, 1, 1, e^{-2i tau}) in the bare basis."""
    z = np.exp(2j * tau)
    return np.diag([z, 1.0, 1.0, z.conjugate()]).astype(np.complex128)


def to_bare_frame(rho_eigen, es: EigenSystem, tau: float, p: ModelParams):
    """U1(tau) u^dag rho u U1^dag(tau): eigen-basis state back to the bare
    rotating frame. All reported observables are invariant under U1."""
    u = es.u
    rho_bare = u.conj().T @ rho_eigen @ u
    u1 = rotating_phase(tau)
    return u1 @ rho_bare @ u1.conj().T
