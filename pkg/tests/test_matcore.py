import numpy as np
import pytest
import scipy.linalg as sla

from qbatt import matcore
from qbatt.errors import NotHermitian


def random_complex(rng, n, m=None):
    m = n if m is None else m
    return rng.normal(size=(n, m)) + 1j * rng.normal(size=(n, m))


def test_kron_matches_numpy():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = random_complex(rng, rng.integers(1, 5))
        b = random_complex(rng, rng.integers(1, 5))
        assert np.array_equal(matcore.kron(a, b), np.kron(a, b))


def test_kron_vectorization_identity():
    # vec(A rho B) = (B^T kron A) vec(rho) with column stacking
    rng = np.random.default_rng(12)
    for _ in range(50):
        a = random_complex(rng, 4)
        b = random_complex(rng, 4)
        rho = random_complex(rng, 4)
        lhs = (a @ rho @ b).flatten(order="F")
        rhs = matcore.kron(b.T, a) @ rho.flatten(order="F")
        assert np.linalg.norm(lhs - rhs) < 1e-12 * max(1.0, np.linalg.norm(lhs))


def test_eig_general_random():
    """Residuals, ordering and reconstruction on random dense matrices."""
    rng = np.random.default_rng(13)
    for n in (1, 2, 3, 4, 8, 16):
        for _ in range(8):
            a = random_complex(rng, n)
            pairs = matcore.eig_general(a)
            assert len(pairs) == n
            assert pairs.diagonalizable
            scale = max(1.0, np.linalg.norm(a))
            for p in pairs:
                assert abs(np.linalg.norm(p.vector) - 1.0) < 1e-12
                res = np.linalg.norm(a @ p.vector - p.value * p.vector)
                assert res < 1e-10 * scale
            w = pairs.values
            # descending real part; ties broken by ascending imaginary part
            for k in range(n - 1):
                assert w[k].real > w[k + 1].real - 1e-12
                if abs(w[k].real - w[k + 1].real) < 1e-12:
                    assert w[k].imag <= w[k + 1].imag + 1e-12


def test_eig_general_matches_lapack_eigenvalues():
    rng = np.random.default_rng(14)
    for _ in range(10):
        a = random_complex(rng, 12)
        w = matcore.eig_general(a).values
        ref = np.sort_complex(np.linalg.eigvals(a))
        assert np.linalg.norm(np.sort_complex(w) - ref) < 1e-9 * np.linalg.norm(a)


def test_eig_general_defective_flag():
    j = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    pairs = matcore.eig_general(j)
    assert not pairs.diagonalizable
    # shifted Jordan block, same structure
    j2 = np.array([[2.0, 1.0, 0.0], [0.0, 2.0, 1.0], [0.0, 0.0, 2.0]], dtype=complex)
    assert not matcore.eig_general(j2).diagonalizable
    assert matcore.eig_general(np.diag([1.0, 2.0, 3.0]).astype(complex)).diagonalizable


def test_eig_hermitian_random():
    rng = np.random.default_rng(15)
    for n in (2, 3, 4, 8, 16):
        for _ in range(8):
            a = random_complex(rng, n)
            h = a + a.conj().T
            pairs = matcore.eig_hermitian(h)
            w = pairs.values
            v = pairs.vectors
            assert np.all(np.abs(w.imag) == 0.0)
            assert np.all(np.diff(w.real) >= 0)  # ascending
            assert np.linalg.norm(v.conj().T @ v - np.eye(n)) < 1e-12
            rec = np.linalg.norm(v @ np.diag(w) @ v.conj().T - h)
            assert rec < 1e-12 * max(1.0, np.linalg.norm(h))
            ref = np.linalg.eigvalsh(h)
            assert np.linalg.norm(w.real - ref) < 1e-10 * max(1.0, np.linalg.norm(h))


def test_eig_hermitian_rejects_non_hermitian():
    a = np.array([[1.0, 2.0], [0.5, 3.0]], dtype=complex)
    with pytest.raises(NotHermitian):
        matcore.eig_hermitian(a)


def test_eig_hermitian_near_degenerate():
    # clustered spectrum is the hard case for Jacobi sweeps
    rng = np.random.default_rng(16)
    for _ in range(10):
        q = np.linalg.qr(random_complex(rng, 6))[0]
        w = np.array([1.0, 1.0 + 1e-13, 1.0 + 2e-13, 2.0, 2.0 + 1e-12, 5.0])
        h = q @ np.diag(w) @ q.conj().T
        h = 0.5 * (h + h.conj().T)
        pairs = matcore.eig_hermitian(h)
        assert np.linalg.norm(np.sort(pairs.values.real) - w) < 1e-11


def test_null_space_rank_deficient():
    rng = np.random.default_rng(17)
    for n, r in ((4, 2), (6, 3), (8, 5), (16, 10)):
        x = random_complex(rng, n, r)
        y = random_complex(rng, r, n)
        a = x @ y
        basis = matcore.null_space(a)
        assert len(basis) == n - r
        scale = np.linalg.norm(a)
        g = np.column_stack(basis)
        assert np.linalg.norm(g.conj().T @ g - np.eye(n - r)) < 1e-10
        for v in basis:
            assert np.linalg.norm(a @ v) <= 1e-9 * scale


def test_null_space_full_rank_and_zero():
    rng = np.random.default_rng(18)
    a = random_complex(rng, 5)
    assert matcore.null_space(a) == []
    basis = matcore.null_space(np.zeros((3, 3), dtype=complex))
    assert len(basis) == 3
    g = np.column_stack(basis)
    assert np.linalg.norm(g.conj().T @ g - np.eye(3)) < 1e-14


def test_propagator_spectral_route():
    rng = np.random.default_rng(19)
    for n in (2, 4, 8, 16):
        for _ in range(5):
            a = random_complex(rng, n)
            t = float(rng.uniform(0.05, 3.0))
            p = matcore.propagator(a, t)
            ref = sla.expm(a * t)
            assert np.linalg.norm(p - ref) < 1e-8 * max(1.0, np.linalg.norm(ref))


def test_propagator_defective_falls_back():
    # nilpotent part forces the Pade route; exact answer known
    j = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    p = matcore.propagator(j, 3.0)
    assert np.linalg.norm(p - np.array([[1.0, 3.0], [0.0, 1.0]])) < 1e-13


def test_propagator_time_zero_is_identity():
    rng = np.random.default_rng(20)
    a = random_complex(rng, 6)
    assert np.array_equal(matcore.propagator(a, 0.0), np.eye(6, dtype=complex))


def test_propagator_rejects_negative_time():
    with pytest.raises(ValueError):
        matcore.propagator(np.eye(2, dtype=complex), -1.0)


def test_propagator_semigroup_property():
    rng = np.random.default_rng(21)
    a = random_complex(rng, 6)
    a = a - np.trace(a) / 6.0 * np.eye(6)  # keep norms moderate
    p1 = matcore.propagator(a, 0.7)
    p2 = matcore.propagator(a, 0.3)
    p3 = matcore.propagator(a, 1.0)
    assert np.linalg.norm(p1 @ p2 - p3) < 1e-9 * max(1.0, np.linalg.norm(p3))


def test_dimension_cap():
    with pytest.raises(ValueError):
        matcore.eig_general(np.eye(65, dtype=complex))
