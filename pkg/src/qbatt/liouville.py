"""Liouvillian superoperator builders for the three master equations:
phenomenological Lindblad (bare basis), resonant Redfield (closed-form
rates), and the general Redfield valid at arbitrary detuning.

Superoperators act on column-stacked density matrices:
vec(A rho B) = (B^T kron A) vec(rho).
"""

from dataclasses import dataclass

import numpy as np

from . import model, reservoir
from .errors import ConfigError
from .model import EigenSystem, ModelParams
from .reservoir import BathPair

_I4 = np.eye(4, dtype=np.complex128)

SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=np.complex128)  # |e><g|
SIGMA_MINUS = SIGMA_PLUS.T.copy()
SIGMA_X = SIGMA_PLUS + SIGMA_MINUS
_I2 = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class Superoperator:
    """16x16 generator acting on vec(rho), tagged with its working basis.

    eigensystem is carried for eigen-basis generators so downstream code can
    return states to the bare frame; None for bare-basis generators.
    """

    matrix: np.ndarray
    basis_tag: str
    kind: str
    eigensystem: EigenSystem | None = None


@dataclass(frozen=True)
class RateSet:
    """Resonant Redfield rates: gamma_i absorb (N-weighted), Gamma_i emit
    (co-occupation-weighted), all scaled by (coupling/M)^2 J_i(M)."""

    gamma1: float
    gamma2: float
    Gamma1: float
    Gamma2: float


def vectorize(rho):
    """Column-stack a 4x4 matrix into a 16-vector."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"expected 4x4, got {rho.shape}")
    return rho.flatten(order="F")


def devectorize(v):
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    if v.shape != (16,):
        raise ValueError(f"expected 16 entries, got {v.shape}")
    return v.reshape((4, 4), order="F")


def _sandwich(a, b):
    # rho -> a rho b
    return np.kron(b.T, a)


def _left(x):
    return np.kron(_I4, x)


def _right(x):
    return np.kron(x.T, _I4)


def _commutator(h):
    return -1j * (_left(h) - _right(h))


def _dissipator(a):
    # 2 a rho a^dag - a^dag a rho - rho a^dag a
    ada = a.conj().T @ a
    return 2.0 * _sandwich(a, a.conj().T) - _left(ada) - _right(ada)


def _tau(a, b):
    t = np.zeros((4, 4), dtype=np.complex128)
    t[a, b] = 1.0
    return t


def lindblad_pheno(p: ModelParams, baths: BathPair, frequency_offset=0.0):
    """Local-dissipator Lindblad generator in the bare basis.

    Bath functions are evaluated at the lab frequencies
    omega_i = delta_i + omega_d (+ optional offset).
    """
    h = model.hamiltonian(p)
    l = _commutator(h)
    ops = (np.kron(SIGMA_PLUS, _I2), np.kron(SIGMA_MINUS, _I2),
           np.kron(_I2, SIGMA_PLUS), np.kron(_I2, SIGMA_MINUS))
    freqs = (p.delta1 + p.omega_d + frequency_offset,
             p.delta2 + p.omega_d + frequency_offset)
    specs = (baths.charger_bath, baths.battery_bath)
    for i in (0, 1):
        j = reservoir.spectral_density(specs[i], freqs[i])
        n = reservoir.occupation(specs[i], freqs[i])
        cn = reservoir.co_occupation(specs[i], freqs[i])
        up, down = ops[2 * i], ops[2 * i + 1]
        l = l + j * n * _dissipator(up) + j * cn * _dissipator(down)
    return Superoperator(matrix=l, basis_tag="bare", kind="lindblad-pheno")


def resonant_rates(p: ModelParams, baths: BathPair, frequency_offset=0.0):
    """Closed-form rates at resonance, evaluated at the level spacing M."""
    _, _, m = model.resonant_frequencies(p)
    w = m + frequency_offset
    scale = (p.coupling / m) ** 2
    out = []
    for spec in (baths.charger_bath, baths.battery_bath):
        j = reservoir.spectral_density(spec, w)
        out.append(scale * j * reservoir.occupation(spec, w))
        out.append(scale * j * reservoir.co_occupation(spec, w))
    return RateSet(gamma1=out[0], Gamma1=out[1], gamma2=out[2], Gamma2=out[3])


def redfield_resonant(p: ModelParams, baths: BathPair, frequency_offset=0.0):
    """Closed-form Redfield generator at delta1 = delta2 = 0, eigen basis.

    Upper doublet (levels 1,2) decays to the lower (3,4) at Gamma rates;
    gamma rates pump back; the gamma1-gamma2 and Gamma1-Gamma2 differences
    drive the non-secular 13<->24 cross terms that survive out of
    equilibrium.
    """
    es = model.diagonalize_resonant(p)
    r = resonant_rates(p, baths, frequency_offset)
    l = _commutator(np.diag(es.energies).astype(np.complex128))

    # indices 0-based: levels (1,2,3,4) -> (0,1,2,3)
    t20, t02 = _tau(2, 0), _tau(0, 2)
    t31, t13 = _tau(3, 1), _tau(1, 3)
    p01 = _tau(0, 0) + _tau(1, 1)
    p23 = _tau(2, 2) + _tau(3, 3)

    big = r.Gamma1 + r.Gamma2
    sml = r.gamma1 + r.gamma2
    l = l + big * (2.0 * (_sandwich(t20, t02) + _sandwich(t31, t13))
                   - _left(p01) - _right(p01))
    l = l + sml * (2.0 * (_sandwich(t02, t20) + _sandwich(t13, t31))
                   - _left(p23) - _right(p23))
    l = l - 2.0 * (r.gamma1 - r.gamma2) * (_sandwich(t02, t31)
                                           + _sandwich(t13, t20))
    l = l - 2.0 * (r.Gamma1 - r.Gamma2) * (_sandwich(t20, t13)
                                           + _sandwich(t31, t02))
    return Superoperator(matrix=l, basis_tag="eigen", kind="redfield-resonant",
                         eigensystem=es)


def chi_coefficients(es: EigenSystem):
    """Matrix elements of sigma_x on each qubit between eigenstates.

    Real symmetric under the row phase convention; the imaginary dust is
    checked and dropped.
    """
    s1 = np.kron(SIGMA_X, _I2)
    s2 = np.kron(_I2, SIGMA_X)
    out = []
    for s in (s1, s2):
        chi = es.u @ s @ es.u.conj().T
        if float(np.max(np.abs(chi.imag))) > 1e-10:
            raise ConfigError("sigma_x matrix elements are not real; "
                              "eigenvector phase convention violated")
        out.append(chi.real.copy())
    return out[0], out[1]


def redfield_general(p: ModelParams, baths: BathPair, frequency_offset=0.0):
    """Redfield generator beyond the secular approximation, any detuning.

    Works in the numeric eigen basis with energies descending, so every
    spacing eps = E_m - E_n (m < n) is positive and bath functions are
    evaluated on their physical domain.
    """
    es = model.diagonalize_general(p)
    chi = chi_coefficients(es)
    specs = (baths.charger_bath, baths.battery_bath)
    e = es.energies
    l = _commutator(np.diag(e).astype(np.complex128))

    d = np.zeros((16, 16), dtype=np.complex128)
    for i in range(4):
        for j in range(i + 1, 4):
            tji, tij = _tau(j, i), _tau(i, j)
            for m in range(4):
                for n in range(m + 1, 4):
                    eps = e[m] - e[n]
                    tmn, tnm = _tau(m, n), _tau(n, m)
                    for x, spec in zip(chi, specs):
                        jw = reservoir.spectral_density(
                            spec, eps + frequency_offset)
                        if jw == 0.0:
                            continue
                        occ = reservoir.occupation(
                            spec, eps + frequency_offset)
                        co = reservoir.co_occupation(
                            spec, eps + frequency_offset)
                        # emission block, co-occupation weighted
                        d = d + jw * co * (
                            x[j, i] * x[m, n]
                            * (_sandwich(tji, tmn) - _right(tmn @ tji))
                            + x[i, j] * x[n, m]
                            * (_sandwich(tnm, tij) - _left(tij @ tnm)))
                        # absorption block, occupation weighted
                        d = d + jw * occ * (
                            x[i, j] * x[n, m]
                            * (_sandwich(tij, tnm) - _right(tnm @ tij))
                            + x[j, i] * x[m, n]
                            * (_sandwich(tmn, tji) - _left(tji @ tmn)))
    return Superoperator(matrix=l + d, basis_tag="eigen",
                         kind="redfield-general", eigensystem=es)
