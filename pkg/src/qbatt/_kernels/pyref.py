"""Pure-Python reference kernels for dense complex matrices.

Implements the same algorithms as the compiled backend, with numpy used
only for array storage and elementwise/slice arithmetic:

- schur: Householder Hessenberg reduction + explicit single-shift QR
  (Wilkinson shift, deflation, exceptional shifts, 100*n^2 iteration cap)
- eig: Schur form + triangular back-substitution eigenvectors
- eig_hermitian: cyclic complex Jacobi
- cpqr: column-pivoted Householder QR (rank revealing)
- solve: Gaussian elimination with partial pivoting
- expm: Pade-13 scaling and squaring

All routines raise ArithmeticError on numerical failure; callers map
that onto the package error types.
"""

import numpy as np

_EPS = float(np.finfo(np.float64).eps)

# Pade order-13 coefficients b_0..b_13 and the matching 1-norm threshold.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)
_THETA13 = 5.371920351148152


def _givens(f, g):
    """Unitary [[c, s], [-conj(s), c]] with real c >= 0 sending (f, g) to (r, 0)."""
    if g == 0:
        return 1.0, 0.0 + 0.0j, f
    if f == 0:
        ag = abs(g)
        return 0.0, g.conjugate() / ag, complex(ag)
    af = abs(f)
    d = (af * af + (g.real * g.real + g.imag * g.imag)) ** 0.5
    c = af / d
    fs = f / af
    s = fs * g.conjugate() / d
    return c, s, fs * d


def _hessenberg(a):
    """Householder reduction A = Q H Q^dag with H upper Hessenberg."""
    n = a.shape[0]
    h = np.array(a, dtype=np.complex128)
    q = np.eye(n, dtype=np.complex128)
    for k in range(n - 2):
        x = h[k + 1:, k].copy()
        xnorm = float(np.linalg.norm(x))
        if xnorm == 0.0:
            continue
        x0 = complex(x[0])
        phase = x0 / abs(x0) if x0 != 0 else 1.0 + 0.0j
        v = x
        v[0] += phase * xnorm  # v = x - alpha*e1 with alpha = -phase*|x|
        vnorm = float(np.linalg.norm(v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        q[:, k + 1:] -= 2.0 * np.outer(q[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h, q


def schur(a, itercap_factor=100):
    """Complex Schur decomposition A = Q T Q^dag, T upper triangular.

    Raises ArithmeticError when the QR iteration exceeds itercap_factor*n^2.
    """
    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    if n == 0:
        return a.copy(), a.copy()
    if n == 1:
        return a.copy(), np.eye(1, dtype=np.complex128)
    h, q = _hessenberg(a)
    hnorm = float(np.linalg.norm(a))
    cap = itercap_factor * n * n
    total = 0
    hi = n - 1
    since_deflation = 0
    while hi > 0:
        # deflation scan: find the top of the active block
        lo = hi
        while lo > 0:
            sub = abs(h[lo, lo - 1])
            thr = _EPS * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo]))
            if thr == 0.0:
                thr = _EPS * hnorm
            if sub <= thr:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            hi -= 1
            since_deflation = 0
            continue
        total += 1
        since_deflation += 1
        if total > cap:
            raise ArithmeticError(
                f"QR iteration exceeded cap {cap} at block [{lo},{hi}]")
        if since_deflation % 10 == 0:
            # exceptional shift to break symmetry-induced stalls
            shift = complex(h[hi, hi]) + 0.75 * abs(h[hi, hi - 1])
        else:
            # Wilkinson shift: trailing 2x2 eigenvalue closest to h[hi,hi]
            a11 = complex(h[hi - 1, hi - 1])
            a12 = complex(h[hi - 1, hi])
            a21 = complex(h[hi, hi - 1])
            a22 = complex(h[hi, hi])
            half = 0.5 * (a11 - a22)
            disc = (half * half + a12 * a21) ** 0.5
            m1 = 0.5 * (a11 + a22) + disc
            m2 = 0.5 * (a11 + a22) - disc
            shift = m1 if abs(m1 - a22) <= abs(m2 - a22) else m2
        # explicit single-shift QR step on the active block
        for k in range(lo, hi + 1):
            h[k, k] -= shift
        ncols = hi - lo
        cs = np.empty(ncols, dtype=np.float64)
        sn = np.empty(ncols, dtype=np.complex128)
        for k in range(lo, hi):
            c, s, r = _givens(complex(h[k, k]), complex(h[k + 1, k]))
            cs[k - lo] = c
            sn[k - lo] = s
            h[k, k] = r
            h[k + 1, k] = 0.0
            row_k = h[k, k + 1:].copy()
            row_k1 = h[k + 1, k + 1:]
            h[k, k + 1:] = c * row_k + s * row_k1
            h[k + 1, k + 1:] = -np.conj(s) * row_k + c * row_k1
        for k in range(lo, hi):
            c = cs[k - lo]
            s = sn[k - lo]
            top = k + 2
            col_k = h[:top, k].copy()
            col_k1 = h[:top, k + 1]
            h[:top, k] = c * col_k + np.conj(s) * col_k1
            h[:top, k + 1] = -s * col_k + c * col_k1
            qcol_k = q[:, k].copy()
            qcol_k1 = q[:, k + 1]
            q[:, k] = c * qcol_k + np.conj(s) * qcol_k1
            q[:, k + 1] = -s * qcol_k + c * qcol_k1
        for k in range(lo, hi + 1):
            h[k, k] += shift
    # enforce exact triangularity below the diagonal
    for i in range(1, n):
        h[i, :i] = 0.0
    return h, q


def _tri_eigvecs(t):
    """Right eigenvectors of an upper-triangular matrix by back substitution.

    Denominators are floored at smin so repeated eigenvalues yield
    (nearly collinear) vectors instead of dividing by zero; the caller
    detects the defect from the vector matrix rank.
    """
    n = t.shape[0]
    v = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        lam = complex(t[k, k])
        smin = max(_EPS * abs(lam), 1e-300)
        y = np.zeros(k + 1, dtype=np.complex128)
        y[k] = 1.0
        for i in range(k - 1, -1, -1):
            acc = complex(t[i, i + 1:k + 1] @ y[i + 1:k + 1])
            d = complex(t[i, i]) - lam
            if abs(d) < smin:
                d = complex(smin)
            yi = -acc / d
            mag = abs(yi)
            if mag > 1e100:
                y[i + 1:] /= mag
                yi /= mag
            y[i] = yi
        nrm = float(np.linalg.norm(y))
        v[:k + 1, k] = y / nrm
    return v


def eig(a, itercap_factor=100):
    """Right eigendecomposition: (values, vectors) with unit-norm columns."""
    t, q = schur(a, itercap_factor)
    v = q @ _tri_eigvecs(t)
    nrm = np.linalg.norm(v, axis=0)
    nrm[nrm == 0.0] = 1.0
    v /= nrm
    return np.diag(t).copy(), v


def eig_hermitian(a, max_sweeps=40):
    """Cyclic complex Jacobi for Hermitian A: ascending real eigenvalues.

    Returns (w, v) with A v = v diag(w) and v unitary. The input is
    symmetrized internally; the caller enforces the Hermiticity precondition.
    """
    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    w = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([w[0, 0].real]), v
    anorm = float(np.linalg.norm(w))
    if anorm == 0.0:
        return np.zeros(n), v
    converged = False
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(w - np.diag(np.diag(w))))
        if off <= 30.0 * _EPS * anorm:
            converged = True
            break
        for p in range(n - 1):
            for q_ in range(p + 1, n):
                apq = complex(w[p, q_])
                b = abs(apq)
                if b == 0.0:
                    continue
                alpha = w[p, p].real
                gamma = w[q_, q_].real
                if b <= 0.5 * _EPS * (abs(alpha) + abs(gamma)):
                    w[p, q_] = 0.0
                    w[q_, p] = 0.0
                    continue
                phase = apq / b
                tau = (gamma - alpha) / (2.0 * b)
                tsign = 1.0 if tau >= 0.0 else -1.0
                tt = tsign / (abs(tau) + (1.0 + tau * tau) ** 0.5)
                c = 1.0 / (1.0 + tt * tt) ** 0.5
                s = tt * c
                # 2x2 unitary: [[c, s], [-s*conj(phase), c*conj(phase)]]
                u_pp = c
                u_pq = s
                u_qp = -s * phase.conjugate()
                u_qq = c * phase.conjugate()
                col_p = w[:, p].copy()
                col_q = w[:, q_].copy()
                w[:, p] = col_p * u_pp + col_q * u_qp
                w[:, q_] = col_p * u_pq + col_q * u_qq
                row_p = w[p, :].copy()
                row_q = w[q_, :].copy()
                w[p, :] = np.conj(u_pp) * row_p + np.conj(u_qp) * row_q
                w[q_, :] = np.conj(u_pq) * row_p + np.conj(u_qq) * row_q
                w[p, q_] = 0.0
                w[q_, p] = 0.0
                w[p, p] = w[p, p].real
                w[q_, q_] = w[q_, q_].real
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q_].copy()
                v[:, p] = vcol_p * u_pp + vcol_q * u_qp
                v[:, q_] = vcol_p * u_pq + vcol_q * u_qq
    if not converged:
        off = float(np.linalg.norm(w - np.diag(np.diag(w))))
        if off > 1e-10 * anorm:
            raise ArithmeticError("Jacobi sweep cap reached before convergence")
    vals = np.diag(w).real.copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]


def cpqr(a):
    """Column-pivoted Householder QR: A[:, piv] = Q R, |diag R| non-increasing."""
    a = np.asarray(a, dtype=np.complex128)
    m, n = a.shape
    r = a.copy()
    q = np.eye(m, dtype=np.complex128)
    piv = np.arange(n)
    for k in range(min(m, n)):
        # fresh column norms of the trailing block (no downdating drift)
        norms = np.linalg.norm(r[k:, k:], axis=0)
        jrel = int(np.argmax(norms))
        if norms[jrel] == 0.0:
            break
        j = k + jrel
        if j != k:
            r[:, [k, j]] = r[:, [j, k]]
            piv[[k, j]] = piv[[j, k]]
        x = r[k:, k].copy()
        xnorm = float(np.linalg.norm(x))
        if xnorm == 0.0:
            continue
        x0 = complex(x[0])
        phase = x0 / abs(x0) if x0 != 0 else 1.0 + 0.0j
        v = x
        v[0] += phase * xnorm  # v = x - alpha*e1, alpha = -phase*|x|
        vnorm = float(np.linalg.norm(v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        r[k:, k:] -= 2.0 * np.outer(v, v.conj() @ r[k:, k:])
        q[:, k:] -= 2.0 * np.outer(q[:, k:] @ v, v.conj())
        r[k + 1:, k] = 0.0
    return q, r, piv


def solve(a, b):
    """Solve A X = B by Gaussian elimination with partial pivoting."""
    a = np.array(a, dtype=np.complex128)
    bb = np.array(b, dtype=np.complex128)
    vec = bb.ndim == 1
    if vec:
        bb = bb[:, None]
    n = a.shape[0]
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < 1e-300:
            raise ArithmeticError("singular matrix in solve")
        if p != k:
            a[[k, p]] = a[[p, k]]
            bb[[k, p]] = bb[[p, k]]
        mult = a[k + 1:, k] / a[k, k]
        a[k + 1:, k + 1:] -= np.outer(mult, a[k, k + 1:])
        bb[k + 1:] -= np.outer(mult, bb[k])
        a[k + 1:, k] = 0.0
    x = np.empty_like(bb)
    for i in range(n - 1, -1, -1):
        x[i] = (bb[i] - a[i, i + 1:] @ x[i + 1:]) / a[i, i]
    return x[:, 0] if vec else x


def expm(a):
    """Matrix exponential by Pade-13 approximation with scaling and squaring."""
    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    nrm = float(np.max(np.sum(np.abs(a), axis=0))) if n else 0.0
    s = 0
    if nrm > _THETA13:
        s = int(np.ceil(np.log2(nrm / _THETA13)))
        a = a / (2.0 ** s)
    b = _PADE13
    ident = np.eye(n, dtype=np.complex128)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a2 @ a4
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    r = solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r
