"""Compiled backend vs pure-Python reference: same algorithms, same answers."""

import os
import subprocess
import sys

import numpy as np
import pytest

from qbatt import _kernels
from qbatt._kernels import pyref

native = pytest.importorskip(
    "qbatt._kernels._native",
    reason="compiled kernels not built; nothing to compare")


def _rand(rng, n, m=None):
    m = n if m is None else m
    return rng.normal(size=(n, m)) + 1j * rng.normal(size=(n, m))


class TestBackendSelection:
    def test_default_prefers_native(self):
        if os.environ.get("QBATT_KERNELS", "").strip().lower() == "python":
            pytest.skip("suite forced onto the python backend")
        assert _kernels.BACKEND == "native"

    @pytest.mark.parametrize("value,expected", [
        ("python", "python"), ("native", "native")])
    def test_env_override(self, value, expected):
        code = ("from qbatt import _kernels; "
                "print(_kernels.BACKEND)")
        env = dict(os.environ, QBATT_KERNELS=value)
        proc = subprocess.run([sys.executable, "-c", code],
                              capture_output=True, text=True, env=env,
                              timeout=120)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == expected

    def test_env_rejects_unknown(self):
        code = "import qbatt._kernels"
        env = dict(os.environ, QBATT_KERNELS="fortran")
        proc = subprocess.run([sys.executable, "-c", code],
                              capture_output=True, text=True, env=env,
                              timeout=120)
        assert proc.returncode != 0
        assert "QBATT_KERNELS" in proc.stderr


class TestKernelParity:
    def test_schur(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            n = int(rng.integers(2, 17))
            a = _rand(rng, n)
            tn, qn = native.schur(a)
            tp, qp = pyref.schur(a)
            scale = max(1.0, np.linalg.norm(a))
            for t, q in ((tn, qn), (tp, qp)):
                assert np.linalg.norm(q @ t @ q.conj().T - a) < 1e-10 * scale
                assert np.linalg.norm(np.tril(t, -1)) == 0.0
            assert np.allclose(np.sort_complex(np.diag(tn)),
                               np.sort_complex(np.diag(tp)), atol=1e-9)

    def test_eig(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            n = int(rng.integers(2, 17))
            a = _rand(rng, n)
            wn, vn = native.eig(a)
            wp, vp = pyref.eig(a)
            scale = max(1.0, np.linalg.norm(a))
            assert np.linalg.norm(a @ vn - vn * wn) < 1e-9 * scale
            assert np.linalg.norm(a @ vp - vp * wp) < 1e-9 * scale
            assert np.allclose(np.sort_complex(wn), np.sort_complex(wp),
                               atol=1e-9)

    def test_eig_hermitian(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            n = int(rng.integers(2, 17))
            a = _rand(rng, n)
            h = a + a.conj().T
            wn, vn = native.eig_hermitian(h)
            wp, vp = pyref.eig_hermitian(h)
            assert np.allclose(wn, wp, atol=1e-11 * max(1, abs(wp).max()))
            # same eigenvectors up to a phase per column
            overlaps = np.abs(np.einsum("ij,ij->j", vn.conj(), vp))
            assert np.all(overlaps > 1.0 - 1e-8)

    def test_cpqr(self):
        rng = np.random.default_rng(14)
        for _ in range(20):
            n = int(rng.integers(2, 13))
            m = int(rng.integers(2, 13))
            a = _rand(rng, m, n)
            qn, rn, pn = native.cpqr(a)
            qp, rp, pp = pyref.cpqr(a)
            assert np.array_equal(pn, pp)
            assert np.allclose(a[:, pn], qn @ rn, atol=1e-10)
            assert np.allclose(np.abs(np.diag(rn)), np.abs(np.diag(rp)),
                               atol=1e-10)

    def test_cpqr_rank_reveal(self):
        rng = np.random.default_rng(15)
        a = _rand(rng, 9, 4) @ _rand(rng, 4, 9)
        _, rn, _ = native.cpqr(a)
        _, rp, _ = pyref.cpqr(a)
        dn, dp = np.abs(np.diag(rn)), np.abs(np.diag(rp))
        assert dn[4] / dn[0] < 1e-12
        assert dp[4] / dp[0] < 1e-12

    def test_solve(self):
        rng = np.random.default_rng(16)
        for _ in range(20):
            n = int(rng.integers(2, 17))
            a = _rand(rng, n)
            b = _rand(rng, n, 3)
            xn = native.solve(a, b)
            xp = pyref.solve(a, b)
            assert np.allclose(xn, xp, atol=1e-9 * max(1, abs(xp).max()))
            v = native.solve(a, b[:, 0])
            assert v.shape == (n,)
            assert np.allclose(v, xn[:, 0], atol=1e-10)
        with pytest.raises(ArithmeticError):
            native.solve(np.zeros((3, 3), complex), np.ones(3, complex))

    def test_expm(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            n = int(rng.integers(2, 13))
            a = _rand(rng, n) * float(rng.uniform(0.1, 30.0))
            en = native.expm(a)
            ep = pyref.expm(a)
            assert np.allclose(en, ep, atol=1e-9 * max(1, abs(ep).max()))


class TestPhysicsParity:
    """The selected backend must not change any physics output."""

    def _swap_to_pyref(self, monkeypatch):
        for name in ("schur", "eig", "eig_hermitian", "cpqr", "solve",
                     "expm"):
            monkeypatch.setattr(_kernels, name, getattr(pyref, name))

    def test_dressed_basis_and_chi_signs(self, monkeypatch):
        from qbatt import liouville, model
        ps = [model.ModelParams(drive=f) for f in (0.05, 0.5, 1.2, 3.0)]
        with_native = [(model.diagonalize_general(p).u,
                        liouville.chi_coefficients(
                            model.diagonalize_general(p))) for p in ps]
        self._swap_to_pyref(monkeypatch)
        for p, (u_n, chi_n) in zip(ps, with_native):
            es = model.diagonalize_general(p)
            assert np.allclose(es.u, u_n, atol=1e-10)
            for a, b in zip(chi_n, liouville.chi_coefficients(es)):
                assert np.allclose(a, b, atol=1e-10)

    def test_steady_state_and_metrics(self, monkeypatch):
        from qbatt import sweep
        cfg = sweep.parse_config(
            "equation = redfield\nstatistics = boson\ninitial = eg\n"
            "axis1 = delta:-2:2:3\nT_bar = 1\ndT = 0.6\n")
        rows_native = [sweep.run_point(cfg, ov)
                       for ov in sweep.grid_points(cfg)]
        self._swap_to_pyref(monkeypatch)
        for ov, rn in zip(sweep.grid_points(cfg), rows_native):
            rp = sweep.run_point(cfg, ov)
            assert rp.bistable == rn.bistable
            assert rp.gap == pytest.approx(rn.gap, rel=1e-6, abs=1e-12)
            assert rp.energy == pytest.approx(rn.energy, abs=1e-9)
            assert rp.ergotropy == pytest.approx(rn.ergotropy, abs=1e-9)
            assert rp.efficiency == pytest.approx(rn.efficiency, abs=1e-9)
            assert rp.concurrence == pytest.approx(rn.concurrence, abs=1e-8)
            assert np.allclose(rp.tomogram, rn.tomogram, atol=1e-9)
