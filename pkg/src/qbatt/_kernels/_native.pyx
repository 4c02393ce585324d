# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
# cython: initializedcheck=False
"""Compiled kernels for dense complex matrices.

Same algorithms as the pure-Python reference backend (Householder
Hessenberg + explicit single-shift QR, triangular back-substitution
eigenvectors, cyclic complex Jacobi, column-pivoted Householder QR,
Gaussian elimination, Pade-13 expm), written as explicit C loops.
All routines raise ArithmeticError on numerical failure.
"""

import numpy as np

from libc.math cimport ceil, fabs, hypot, log2, sqrt

ctypedef double complex zdouble

cdef double _EPS = 2.220446049250313e-16

cdef double _THETA13 = 5.371920351148152

cdef double[14] _PADE13
_PADE13[0] = 64764752532480000.0
_PADE13[1] = 32382376266240000.0
_PADE13[2] = 7771770303897600.0
_PADE13[3] = 1187353796428800.0
_PADE13[4] = 129060195264000.0
_PADE13[5] = 10559470521600.0
_PADE13[6] = 670442572800.0
_PADE13[7] = 33522128640.0
_PADE13[8] = 1323241920.0
_PADE13[9] = 40840800.0
_PADE13[10] = 960960.0
_PADE13[11] = 16380.0
_PADE13[12] = 182.0
_PADE13[13] = 1.0


cdef inline zdouble _conj(zdouble z):
    return z.real - z.imag * 1j


cdef inline double _cabs(zdouble z):
    return hypot(z.real, z.imag)


cdef inline zdouble _csqrt(zdouble z):
    # principal square root, matching complex ** 0.5 up to rounding
    cdef double r = hypot(z.real, z.imag)
    cdef double re, im
    if r == 0.0:
        return 0.0
    re = sqrt(0.5 * (r + z.real))
    im = sqrt(0.5 * (r - z.real))
    if z.imag < 0.0:
        im = -im
    return re + im * 1j


cdef inline double _fro_norm(zdouble[:, ::1] a):
    cdef Py_ssize_t i, j, n = a.shape[0], m = a.shape[1]
    cdef double acc = 0.0
    for i in range(n):
        for j in range(m):
            acc += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
    return sqrt(acc)


cdef void _matmul(zdouble[:, ::1] a, zdouble[:, ::1] b,
                  zdouble[:, ::1] out):
    cdef Py_ssize_t i, j, k, n = a.shape[0], m = b.shape[1], p = a.shape[1]
    cdef zdouble aik
    for i in range(n):
        for j in range(m):
            out[i, j] = 0.0
        for k in range(p):
            aik = a[i, k]
            for j in range(m):
                out[i, j] = out[i, j] + aik * b[k, j]


cdef void _givens(zdouble f, zdouble g, double* c, zdouble* s, zdouble* r):
    # unitary [[c, s], [-conj(s), c]] with real c >= 0 sending (f, g) to (r, 0)
    cdef double ag, af, d
    cdef zdouble fs
    if g.real == 0.0 and g.imag == 0.0:
        c[0] = 1.0
        s[0] = 0.0
        r[0] = f
        return
    if f.real == 0.0 and f.imag == 0.0:
        ag = _cabs(g)
        c[0] = 0.0
        s[0] = _conj(g) / ag
        r[0] = ag
        return
    af = _cabs(f)
    d = sqrt(af * af + g.real * g.real + g.imag * g.imag)
    c[0] = af / d
    fs = f / af
    s[0] = fs * _conj(g) / d
    r[0] = fs * d


cdef void _hessenberg(zdouble[:, ::1] h, zdouble[:, ::1] q,
                      zdouble[::1] v, zdouble[::1] w):
    """In-place Householder reduction; h starts as A, q as identity."""
    cdef Py_ssize_t n = h.shape[0], k, i, j, m
    cdef double xnorm, vnorm
    cdef zdouble x0, phase, acc
    for k in range(n - 2):
        m = n - k - 1
        xnorm = 0.0
        for i in range(m):
            v[i] = h[k + 1 + i, k]
            xnorm += v[i].real * v[i].real + v[i].imag * v[i].imag
        xnorm = sqrt(xnorm)
        if xnorm == 0.0:
            continue
        x0 = v[0]
        if x0.real != 0.0 or x0.imag != 0.0:
            phase = x0 / _cabs(x0)
        else:
            phase = 1.0
        v[0] = v[0] + phase * xnorm  # v = x - alpha*e1, alpha = -phase*|x|
        vnorm = 0.0
        for i in range(m):
            vnorm += v[i].real * v[i].real + v[i].imag * v[i].imag
        vnorm = sqrt(vnorm)
        if vnorm == 0.0:
            continue
        for i in range(m):
            v[i] = v[i] / vnorm
        # left reflection on rows k+1.. over columns k..
        for j in range(k, n):
            acc = 0.0
            for i in range(m):
                acc = acc + _conj(v[i]) * h[k + 1 + i, j]
            w[j] = acc
        for i in range(m):
            for j in range(k, n):
                h[k + 1 + i, j] = h[k + 1 + i, j] - 2.0 * v[i] * w[j]
        # right reflection on columns k+1.. over all rows
        for i in range(n):
            acc = 0.0
            for j in range(m):
                acc = acc + h[i, k + 1 + j] * v[j]
            w[i] = acc
        for i in range(n):
            for j in range(m):
                h[i, k + 1 + j] = h[i, k + 1 + j] - 2.0 * w[i] * _conj(v[j])
        for i in range(n):
            acc = 0.0
            for j in range(m):
                acc = acc + q[i, k + 1 + j] * v[j]
            w[i] = acc
        for i in range(n):
            for j in range(m):
                q[i, k + 1 + j] = q[i, k + 1 + j] - 2.0 * w[i] * _conj(v[j])
        for i in range(k + 2, n):
            h[i, k] = 0.0


def schur(a, itercap_factor=100):
    """Complex Schur decomposition A = Q T Q^dag, T upper triangular.

    Raises ArithmeticError when the QR iteration exceeds itercap_factor*n^2.
    """
    a_np = np.array(a, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_np.shape[0]
    if n == 0:
        return a_np.copy(), a_np.copy()
    if n == 1:
        return a_np.copy(), np.eye(1, dtype=np.complex128)
    h_np = a_np.copy()
    q_np = np.eye(n, dtype=np.complex128)
    work1 = np.empty(n, dtype=np.complex128)
    work2 = np.empty(n, dtype=np.complex128)
    cs_np = np.empty(n, dtype=np.float64)
    sn_np = np.empty(n, dtype=np.complex128)

    cdef zdouble[:, ::1] h = h_np
    cdef zdouble[:, ::1] q = q_np
    cdef zdouble[::1] wv = work1
    cdef zdouble[::1] wv2 = work2
    cdef double[::1] cs = cs_np
    cdef zdouble[::1] sn = sn_np

    _hessenberg(h, q, wv, wv2)

    cdef double hnorm = _fro_norm(a_np)
    cdef long cap = <long> itercap_factor * n * n
    cdef long total = 0, since_deflation = 0
    cdef Py_ssize_t hi = n - 1, lo, k, i, j, top
    cdef double sub, thr, c
    cdef zdouble a11, a12, a21, a22, half, disc, m1, m2, shift
    cdef zdouble s, r, tk, tk1

    while hi > 0:
        # deflation scan: find the top of the active block
        lo = hi
        while lo > 0:
            sub = _cabs(h[lo, lo - 1])
            thr = _EPS * (_cabs(h[lo - 1, lo - 1]) + _cabs(h[lo, lo]))
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
            shift = h[hi, hi] + 0.75 * _cabs(h[hi, hi - 1])
        else:
            # Wilkinson shift: trailing 2x2 eigenvalue closest to h[hi,hi]
            a11 = h[hi - 1, hi - 1]
            a12 = h[hi - 1, hi]
            a21 = h[hi, hi - 1]
            a22 = h[hi, hi]
            half = 0.5 * (a11 - a22)
            disc = _csqrt(half * half + a12 * a21)
            m1 = 0.5 * (a11 + a22) + disc
            m2 = 0.5 * (a11 + a22) - disc
            if _cabs(m1 - a22) <= _cabs(m2 - a22):
                shift = m1
            else:
                shift = m2
        # explicit single-shift QR step on the active block
        for k in range(lo, hi + 1):
            h[k, k] = h[k, k] - shift
        for k in range(lo, hi):
            _givens(h[k, k], h[k + 1, k], &c, &s, &r)
            cs[k - lo] = c
            sn[k - lo] = s
            h[k, k] = r
            h[k + 1, k] = 0.0
            for j in range(k + 1, n):
                tk = h[k, j]
                tk1 = h[k + 1, j]
                h[k, j] = c * tk + s * tk1
                h[k + 1, j] = -_conj(s) * tk + c * tk1
        for k in range(lo, hi):
            c = cs[k - lo]
            s = sn[k - lo]
            top = k + 2
            for i in range(top):
                tk = h[i, k]
                tk1 = h[i, k + 1]
                h[i, k] = c * tk + _conj(s) * tk1
                h[i, k + 1] = -s * tk + c * tk1
            for i in range(n):
                tk = q[i, k]
                tk1 = q[i, k + 1]
                q[i, k] = c * tk + _conj(s) * tk1
                q[i, k + 1] = -s * tk + c * tk1
        for k in range(lo, hi + 1):
            h[k, k] = h[k, k] + shift
    # enforce exact triangularity below the diagonal
    for i in range(1, n):
        for j in range(i):
            h[i, j] = 0.0
    return h_np, q_np


cdef void _tri_eigvecs(zdouble[:, ::1] t, zdouble[:, ::1] v,
                       zdouble[::1] y):
    """Right eigenvectors of upper-triangular t by back substitution.

    Denominators are floored at smin so repeated eigenvalues yield
    (nearly collinear) vectors instead of dividing by zero; the caller
    detects the defect from the vector matrix rank.
    """
    cdef Py_ssize_t n = t.shape[0], k, i, j
    cdef zdouble lam, acc, d, yi
    cdef double smin, mag, nrm
    for k in range(n):
        lam = t[k, k]
        smin = _EPS * _cabs(lam)
        if smin < 1e-300:
            smin = 1e-300
        for i in range(k):
            y[i] = 0.0
        y[k] = 1.0
        for i in range(k - 1, -1, -1):
            acc = 0.0
            for j in range(i + 1, k + 1):
                acc = acc + t[i, j] * y[j]
            d = t[i, i] - lam
            if _cabs(d) < smin:
                d = smin
            yi = -acc / d
            mag = _cabs(yi)
            if mag > 1e100:
                for j in range(i + 1, k + 1):
                    y[j] = y[j] / mag
                yi = yi / mag
            y[i] = yi
        nrm = 0.0
        for i in range(k + 1):
            nrm += y[i].real * y[i].real + y[i].imag * y[i].imag
        nrm = sqrt(nrm)
        for i in range(n):
            if i <= k:
                v[i, k] = y[i] / nrm
            else:
                v[i, k] = 0.0


def eig(a, itercap_factor=100):
    """Right eigendecomposition: (values, vectors) with unit-norm columns."""
    t_np, q_np = schur(a, itercap_factor)
    cdef Py_ssize_t n = t_np.shape[0], i, j
    tri_np = np.empty((n, n), dtype=np.complex128)
    y_np = np.empty(n, dtype=np.complex128)
    v_np = np.empty((n, n), dtype=np.complex128)
    cdef zdouble[:, ::1] t = t_np
    cdef zdouble[:, ::1] tri = tri_np
    cdef zdouble[::1] y = y_np
    cdef zdouble[:, ::1] q = q_np
    cdef zdouble[:, ::1] v = v_np
    if n > 0:
        _tri_eigvecs(t, tri, y)
        _matmul(q, tri, v)
    cdef double nrm
    for j in range(n):
        nrm = 0.0
        for i in range(n):
            nrm += v[i, j].real * v[i, j].real + v[i, j].imag * v[i, j].imag
        nrm = sqrt(nrm)
        if nrm == 0.0:
            nrm = 1.0
        for i in range(n):
            v[i, j] = v[i, j] / nrm
    return np.diag(t_np).copy(), v_np


def eig_hermitian(a, max_sweeps=40):
    """Cyclic complex Jacobi for Hermitian A: ascending real eigenvalues.

    Returns (w, v) with A v = v diag(w) and v unitary. The input is
    symmetrized internally; the caller enforces the Hermiticity
    precondition.
    """
    a_np = np.asarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = a_np.shape[0]
    w_np = np.ascontiguousarray(0.5 * (a_np + a_np.conj().T))
    v_np = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([w_np[0, 0].real]), v_np

    cdef zdouble[:, ::1] w = w_np
    cdef zdouble[:, ::1] v = v_np
    cdef double anorm = _fro_norm(w)
    if anorm == 0.0:
        return np.zeros(n), v_np

    cdef Py_ssize_t sweep, p, q, i
    cdef long cap = <long> max_sweeps
    cdef bint converged = False
    cdef double off, b, alpha, gamma, tau, tsign, tt, c, s
    cdef zdouble apq, phase, u_pp, u_pq, u_qp, u_qq, wp, wq

    for sweep in range(cap):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += (w[p, q].real * w[p, q].real
                            + w[p, q].imag * w[p, q].imag)
        off = sqrt(off)
        if off <= 30.0 * _EPS * anorm:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                b = _cabs(apq)
                if b == 0.0:
                    continue
                alpha = w[p, p].real
                gamma = w[q, q].real
                if b <= 0.5 * _EPS * (fabs(alpha) + fabs(gamma)):
                    w[p, q] = 0.0
                    w[q, p] = 0.0
                    continue
                phase = apq / b
                tau = (gamma - alpha) / (2.0 * b)
                tsign = 1.0 if tau >= 0.0 else -1.0
                tt = tsign / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + tt * tt)
                s = tt * c
                # 2x2 unitary: [[c, s], [-s*conj(phase), c*conj(phase)]]
                u_pp = c
                u_pq = s
                u_qp = -s * _conj(phase)
                u_qq = c * _conj(phase)
                for i in range(n):
                    wp = w[i, p]
                    wq = w[i, q]
                    w[i, p] = wp * u_pp + wq * u_qp
                    w[i, q] = wp * u_pq + wq * u_qq
                for i in range(n):
                    wp = w[p, i]
                    wq = w[q, i]
                    w[p, i] = _conj(u_pp) * wp + _conj(u_qp) * wq
                    w[q, i] = _conj(u_pq) * wp + _conj(u_qq) * wq
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = w[p, p].real
                w[q, q] = w[q, q].real
                for i in range(n):
                    wp = v[i, p]
                    wq = v[i, q]
                    v[i, p] = wp * u_pp + wq * u_qp
                    v[i, q] = wp * u_pq + wq * u_qq
    if not converged:
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += (w[p, q].real * w[p, q].real
                            + w[p, q].imag * w[p, q].imag)
        off = sqrt(off)
        if off > 1e-10 * anorm:
            raise ArithmeticError("Jacobi sweep cap reached before convergence")
    vals = np.diag(w_np).real.copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v_np[:, order]


def cpqr(a):
    """Column-pivoted Householder QR: A[:, piv] = Q R, |diag R| non-increasing."""
    a_np = np.array(a, dtype=np.complex128, order="C")
    cdef Py_ssize_t m = a_np.shape[0], n = a_np.shape[1]
    r_np = a_np.copy()
    q_np = np.eye(m, dtype=np.complex128)
    piv_np = np.arange(n, dtype=np.intp)
    v_np = np.empty(m, dtype=np.complex128)
    w_np = np.empty(max(m, n), dtype=np.complex128)

    cdef zdouble[:, ::1] r = r_np
    cdef zdouble[:, ::1] q = q_np
    cdef Py_ssize_t[::1] piv = piv_np
    cdef zdouble[::1] v = v_np
    cdef zdouble[::1] w = w_np

    cdef Py_ssize_t k, i, j, jrel, jmax, tmp, rows
    cdef double best, nrm, xnorm, vnorm
    cdef zdouble x0, phase, acc, swap

    for k in range(min(m, n)):
        # fresh column norms of the trailing block (no downdating drift)
        best = -1.0
        jmax = k
        for j in range(k, n):
            nrm = 0.0
            for i in range(k, m):
                nrm += r[i, j].real * r[i, j].real + r[i, j].imag * r[i, j].imag
            nrm = sqrt(nrm)
            if nrm > best:
                best = nrm
                jmax = j
        if best == 0.0:
            break
        if jmax != k:
            for i in range(m):
                swap = r[i, k]
                r[i, k] = r[i, jmax]
                r[i, jmax] = swap
            tmp = piv[k]
            piv[k] = piv[jmax]
            piv[jmax] = tmp
        rows = m - k
        xnorm = 0.0
        for i in range(rows):
            v[i] = r[k + i, k]
            xnorm += v[i].real * v[i].real + v[i].imag * v[i].imag
        xnorm = sqrt(xnorm)
        if xnorm == 0.0:
            continue
        x0 = v[0]
        if x0.real != 0.0 or x0.imag != 0.0:
            phase = x0 / _cabs(x0)
        else:
            phase = 1.0
        v[0] = v[0] + phase * xnorm  # v = x - alpha*e1, alpha = -phase*|x|
        vnorm = 0.0
        for i in range(rows):
            vnorm += v[i].real * v[i].real + v[i].imag * v[i].imag
        vnorm = sqrt(vnorm)
        if vnorm == 0.0:
            continue
        for i in range(rows):
            v[i] = v[i] / vnorm
        for j in range(k, n):
            acc = 0.0
            for i in range(rows):
                acc = acc + _conj(v[i]) * r[k + i, j]
            w[j] = acc
        for i in range(rows):
            for j in range(k, n):
                r[k + i, j] = r[k + i, j] - 2.0 * v[i] * w[j]
        for i in range(m):
            acc = 0.0
            for j in range(rows):
                acc = acc + q[i, k + j] * v[j]
            w[i] = acc
        for i in range(m):
            for j in range(rows):
                q[i, k + j] = q[i, k + j] - 2.0 * w[i] * _conj(v[j])
        for i in range(k + 1, m):
            r[i, k] = 0.0
    return q_np, r_np, piv_np


cdef int _solve_core(zdouble[:, ::1] a, zdouble[:, ::1] b) except -1:
    """In-place Gaussian elimination with partial pivoting; b becomes X."""
    cdef Py_ssize_t n = a.shape[0], nrhs = b.shape[1], k, i, j, p
    cdef double best, mag
    cdef zdouble swap, mult, acc
    for k in range(n):
        best = -1.0
        p = k
        for i in range(k, n):
            mag = _cabs(a[i, k])
            if mag > best:
                best = mag
                p = i
        if best < 1e-300:
            raise ArithmeticError("singular matrix in solve")
        if p != k:
            for j in range(n):
                swap = a[k, j]
                a[k, j] = a[p, j]
                a[p, j] = swap
            for j in range(nrhs):
                swap = b[k, j]
                b[k, j] = b[p, j]
                b[p, j] = swap
        for i in range(k + 1, n):
            mult = a[i, k] / a[k, k]
            for j in range(k + 1, n):
                a[i, j] = a[i, j] - mult * a[k, j]
            for j in range(nrhs):
                b[i, j] = b[i, j] - mult * b[k, j]
            a[i, k] = 0.0
    for i in range(n - 1, -1, -1):
        for j in range(nrhs):
            acc = b[i, j]
            for k in range(i + 1, n):
                acc = acc - a[i, k] * b[k, j]
            b[i, j] = acc / a[i, i]
    return 0


def solve(a, b):
    """Solve A X = B by Gaussian elimination with partial pivoting."""
    a_np = np.array(a, dtype=np.complex128, order="C")
    b_np = np.array(b, dtype=np.complex128, order="C")
    vec = b_np.ndim == 1
    if vec:
        b_np = np.ascontiguousarray(b_np[:, None])
    _solve_core(a_np, b_np)
    return b_np[:, 0].copy() if vec else b_np


cdef void _axpy_combo(zdouble[:, ::1] out, double b3, zdouble[:, ::1] m3,
                      double b2, zdouble[:, ::1] m2,
                      double b1, zdouble[:, ::1] m1,
                      double b0):
    """out = b3*m3 + b2*m2 + b1*m1 + b0*I"""
    cdef Py_ssize_t i, j, n = out.shape[0]
    for i in range(n):
        for j in range(n):
            out[i, j] = b3 * m3[i, j] + b2 * m2[i, j] + b1 * m1[i, j]
        out[i, i] = out[i, i] + b0


def expm(a):
    """Matrix exponential by Pade-13 approximation with scaling and squaring."""
    a_np = np.array(a, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_np.shape[0], i, j
    cdef double nrm = 0.0, colsum
    cdef zdouble[:, ::1] av = a_np
    for j in range(n):
        colsum = 0.0
        for i in range(n):
            colsum += _cabs(av[i, j])
        if colsum > nrm:
            nrm = colsum
    cdef long s = 0, step
    cdef double scale
    if nrm > _THETA13:
        s = <long> ceil(log2(nrm / _THETA13))
        scale = 2.0 ** s
        for i in range(n):
            for j in range(n):
                av[i, j] = av[i, j] / scale

    a2_np = np.empty((n, n), dtype=np.complex128)
    a4_np = np.empty((n, n), dtype=np.complex128)
    a6_np = np.empty((n, n), dtype=np.complex128)
    t1_np = np.empty((n, n), dtype=np.complex128)
    t2_np = np.empty((n, n), dtype=np.complex128)
    u_np = np.empty((n, n), dtype=np.complex128)
    v_np = np.empty((n, n), dtype=np.complex128)
    cdef zdouble[:, ::1] a2 = a2_np
    cdef zdouble[:, ::1] a4 = a4_np
    cdef zdouble[:, ::1] a6 = a6_np
    cdef zdouble[:, ::1] t1 = t1_np
    cdef zdouble[:, ::1] t2 = t2_np
    cdef zdouble[:, ::1] u = u_np
    cdef zdouble[:, ::1] vv = v_np

    _matmul(av, av, a2)
    _matmul(a2, a2, a4)
    _matmul(a2, a4, a6)
    # u = a @ (a6 @ (b13 a6 + b11 a4 + b9 a2) + b7 a6 + b5 a4 + b3 a2 + b1 I)
    _axpy_combo(t1, _PADE13[13], a6, _PADE13[11], a4, _PADE13[9], a2, 0.0)
    _matmul(a6, t1, t2)
    for i in range(n):
        for j in range(n):
            t2[i, j] = (t2[i, j] + _PADE13[7] * a6[i, j]
                        + _PADE13[5] * a4[i, j] + _PADE13[3] * a2[i, j])
        t2[i, i] = t2[i, i] + _PADE13[1]
    _matmul(av, t2, u)
    # v = a6 @ (b12 a6 + b10 a4 + b8 a2) + b6 a6 + b4 a4 + b2 a2 + b0 I
    _axpy_combo(t1, _PADE13[12], a6, _PADE13[10], a4, _PADE13[8], a2, 0.0)
    _matmul(a6, t1, t2)
    for i in range(n):
        for j in range(n):
            vv[i, j] = (t2[i, j] + _PADE13[6] * a6[i, j]
                        + _PADE13[4] * a4[i, j] + _PADE13[2] * a2[i, j])
        vv[i, i] = vv[i, i] + _PADE13[0]

    num_np = np.empty((n, n), dtype=np.complex128)
    den_np = np.empty((n, n), dtype=np.complex128)
    cdef zdouble[:, ::1] num = num_np
    cdef zdouble[:, ::1] den = den_np
    for i in range(n):
        for j in range(n):
            den[i, j] = vv[i, j] - u[i, j]
            num[i, j] = vv[i, j] + u[i, j]
    _solve_core(den, num)
    r_np = num_np
    sq_np = np.empty((n, n), dtype=np.complex128)
    cdef zdouble[:, ::1] rv = num
    cdef zdouble[:, ::1] sq = sq_np
    for step in range(s):
        _matmul(rv, rv, sq)
        r_np, sq_np = sq_np, r_np
        rv = r_np
        sq = sq_np
    return r_np
