"""Liouvillian spectral analysis: sorted spectrum, gap, steady-state
extraction or bistability detection, and time evolution.
"""

from dataclasses import dataclass

import numpy as np

from . import matcore
from .errors import StepTooLarge
from .liouville import Superoperator, devectorize, vectorize

DEFAULT_GAP_TOL = 1e-8


@dataclass(frozen=True)
class SpectralReport:
    """Spectrum sorted by descending real part (zero mode first), the gap
    |Re lambda_1|, and the steady state when it is unique.

    steady_state is None when the kernel is degenerate (bistable); the
    long-time state then depends on the initial condition and must be
    obtained with evolve_to.
    """

    eigenvalues: np.ndarray
    gap: float
    kernel_dim: int
    steady_state: np.ndarray | None
    bistable: bool
    diagonalizable: bool


def analyze(l: Superoperator, gap_tol: float = DEFAULT_GAP_TOL):
    """Full spectral report for a Liouvillian superoperator."""
    pairs = matcore.eig_general(l.matrix)
    w = pairs.values
    gap = abs(w[1].real) if len(w) > 1 else 0.0
    kernel = matcore.null_space(l.matrix, tol=1e-9)
    kernel_dim = len(kernel)
    steady = None
    if kernel_dim == 1:
        rho = devectorize(kernel[0])
        rho = 0.5 * (rho + rho.conj().T)
        tr = np.trace(rho).real
        if abs(tr) > 1e-10:
            steady = rho / tr
    bistable = (kernel_dim >= 2 or gap < gap_tol
                or (kernel_dim == 1 and steady is None))
    return SpectralReport(
        eigenvalues=w,
        gap=gap,
        kernel_dim=kernel_dim,
        steady_state=steady,
        bistable=bool(bistable),
        diagonalizable=pairs.diagonalizable,
    )


def _check_density(rho):
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got {rho.shape}")
    if abs(np.trace(rho) - 1.0) > 1e-6:
        raise ValueError(f"density matrix trace {np.trace(rho)} is not 1")
    if np.linalg.norm(rho - rho.conj().T) > 1e-8:
        raise ValueError("density matrix is not Hermitian")
    return rho


def evolve_to(l: Superoperator, rho0, tau: float):
    """Propagate rho0 to time tau with the matrix exponential of l."""
    rho0 = _check_density(rho0)
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if tau == 0:
        return rho0.copy()
    prop = matcore.propagator(l.matrix, tau)
    return devectorize(prop @ vectorize(rho0))


def rk4_evolve(l: Superoperator, rho0, tau: float, dt: float):
    """Fixed-step fourth-order integration of dvec(rho)/dt = l vec(rho).

    Exists as an independent cross-check of the exponential route at short
    horizons; not meant for tau ~ 1e4.
    """
    rho0 = _check_density(rho0)
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if dt <= 0:
        raise ValueError("dt must be positive")
    lnorm = float(np.linalg.norm(l.matrix))
    if lnorm > 0 and dt > 0.1 / lnorm:
        raise StepTooLarge(
            f"dt={dt} exceeds stability guard {0.1 / lnorm:.3e}")
    if tau == 0:
        return rho0.copy()
    m = l.matrix
    steps = max(1, int(np.ceil(tau / dt)))
    h = tau / steps
    v = vectorize(rho0)
    for _ in range(steps):
        k1 = m @ v
        k2 = m @ (v + 0.5 * h * k1)
        k3 = m @ (v + 0.5 * h * k2)
        k4 = m @ (v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return devectorize(v)
