"""Dense complex-matrix kernel API: Kronecker products, eigendecompositions,
null spaces, and propagators.

All matrices are numpy complex128 arrays of dimension <= 64; everything here
is a pure function. The numerical core lives in qbatt._kernels with a
compiled backend and a pure-Python fallback selected at import time.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NonConvergence, NotHermitian

_MAX_DIM = 64


@dataclass(frozen=True)
class EigenPair:
    """An eigenvalue with its unit-norm right eigenvector."""

    value: complex
    vector: np.ndarray


class EigenPairs(Sequence):
    """Sequence of EigenPair plus a diagonalizability flag.

    `diagonalizable` is False when the eigenvector matrix is numerically
    rank deficient or some residual ||A v - w v|| exceeds 1e-9 ||A||_F.
    """

    def __init__(self, pairs, diagonalizable):
        self._pairs = tuple(pairs)
        self.diagonalizable = bool(diagonalizable)

    def __len__(self):
        return len(self._pairs)

    def __getitem__(self, i):
        return self._pairs[i]

    @property
    def values(self):
        return np.array([p.value for p in self._pairs], dtype=np.complex128)

    @property
    def vectors(self):
        """Eigenvectors as matrix columns, in pair order."""
        return np.column_stack([p.vector for p in self._pairs])


def _as_square(a):
    a = np.ascontiguousarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > _MAX_DIM:
        raise ValueError(f"dimension {a.shape[0]} exceeds supported maximum {_MAX_DIM}")
    return a


def kron(a, b):
    """Kronecker product (a x b)."""
    return np.kron(np.asarray(a, dtype=np.complex128),
                   np.asarray(b, dtype=np.complex128))


def eig_general(a):
    """Full right eigendecomposition of a general square matrix.

    Pairs are sorted by descending real part, then ascending imaginary part.
    """
    a = _as_square(a)
    n = a.shape[0]
    try:
        w, v = _kernels.eig(a)
    except ArithmeticError as exc:
        raise NonConvergence(str(exc)) from exc
    order = np.lexsort((w.imag, -w.real))
    w = w[order]
    v = v[:, order]
    anorm = float(np.linalg.norm(a))
    scale = max(anorm, 1.0)
    res_ok = all(
        float(np.linalg.norm(a @ v[:, k] - w[k] * v[:, k])) <= 1e-9 * scale
        for k in range(n)
    )
    _, r, _ = _kernels.cpqr(v)
    rdiag = np.abs(np.diag(r))
    full_rank = bool(rdiag[-1] > 1e-10 * max(rdiag[0], 1e-300)) if n else True
    pairs = [EigenPair(complex(w[k]), v[:, k].copy()) for k in range(n)]
    return EigenPairs(pairs, diagonalizable=res_ok and full_rank)


def eig_hermitian(a):
    """Eigendecomposition of a Hermitian matrix: real ascending eigenvalues,
    orthonormal eigenvectors.

    Raises NotHermitian when ||a - a^dag||_F > 1e-10 ||a||_F.
    """
    a = _as_square(a)
    anorm = float(np.linalg.norm(a))
    herm_defect = float(np.linalg.norm(a - a.conj().T))
    if anorm > 0.0 and herm_defect > 1e-10 * anorm:
        raise NotHermitian(
            f"relative Hermiticity defect {herm_defect / anorm:.3e} exceeds 1e-10")
    try:
        w, v = _kernels.eig_hermitian(a)
    except ArithmeticError as exc:
        raise NonConvergence(str(exc)) from exc
    pairs = [EigenPair(complex(w[k]), v[:, k].copy()) for k in range(a.shape[0])]
    return EigenPairs(pairs, diagonalizable=True)


def null_space(a, tol=1e-9):
    """Orthonormal basis of the right kernel {v : ||a v|| <= tol ||a||_F}.

    Returns a list of column vectors (possibly empty). Rank is decided from
    the column-pivoted QR diagonal; candidate vectors are re-orthonormalized
    and verified against the residual bound.
    """
    a = _as_square(a)
    n = a.shape[0]
    anorm = float(np.linalg.norm(a))
    if anorm == 0.0:
        return [np.eye(n, dtype=np.complex128)[:, k] for k in range(n)]
    q, r, piv = _kernels.cpqr(a)
    rdiag = np.abs(np.diag(r))
    thr = tol * anorm
    rank = int(np.sum(rdiag > thr))
    if rank >= n:
        return []
    k = n - rank
    # solve R11 X = -R12 by back substitution, kernel = [X; I] in pivot order
    x = np.zeros((rank, k), dtype=np.complex128)
    for j in range(k):
        rhs = -r[:rank, rank + j].copy()
        for i in range(rank - 1, -1, -1):
            acc = rhs[i] - r[i, i + 1:rank] @ x[i + 1:rank, j]
            x[i, j] = acc / r[i, i]
    basis = np.zeros((n, k), dtype=np.complex128)
    basis[piv[:rank], :] = x
    basis[piv[rank:], :] = np.eye(k)
    # modified Gram-Schmidt, two passes for orthogonality at working precision
    cols = []
    for j in range(k):
        v = basis[:, j].copy()
        for _ in range(2):
            for u in cols:
                v -= (u.conj() @ v) * u
        nrm = float(np.linalg.norm(v))
        if nrm < 1e-12:
            continue
        cols.append(v / nrm)
    return [v for v in cols if float(np.linalg.norm(a @ v)) <= thr]


def propagator(l, t):
    """Matrix exponential exp(l*t).

    Uses the spectral route when l is numerically diagonalizable (checked by
    reconstruction residual), otherwise falls back to Pade scaling-and-squaring.
    """
    l = _as_square(l)
    if t < 0:
        raise ValueError("propagation time must be nonnegative")
    n = l.shape[0]
    if t == 0:
        return np.eye(n, dtype=np.complex128)
    lnorm = float(np.linalg.norm(l))
    try:
        w, v = _kernels.eig(l)
        vinv = _kernels.solve(v, np.eye(n, dtype=np.complex128))
        recon = (v * w) @ vinv
        if float(np.linalg.norm(recon - l)) <= 1e-9 * max(lnorm, 1.0):
            return (v * np.exp(w * t)) @ vinv
    except ArithmeticError:
        pass
    try:
        return _kernels.expm(l * t)
    except ArithmeticError as exc:
        raise NonConvergence(str(exc)) from exc
