"""Numerical kernel backend selection.

Set QBATT_KERNELS=python to force the pure-Python reference implementation,
QBATT_KERNELS=native to require the compiled extension (ImportError if it is
missing). By default the compiled extension is used when available.
"""

import os

from . import pyref

_choice = os.environ.get("QBATT_KERNELS", "").strip().lower()

if _choice in ("", "native"):
    try:
        from . import _native as _impl
        BACKEND = "native"
    except ImportError:
        if _choice == "native":
            raise
        _impl = pyref
        BACKEND = "python"
elif _choice == "python":
    _impl = pyref
    BACKEND = "python"
else:
    raise ImportError(f"unrecognized QBATT_KERNELS value: {_choice!r}")

schur = _impl.schur
eig = _impl.eig
eig_hermitian = _impl.eig_hermitian
cpqr = _impl.cpqr
solve = _impl.solve
expm = _impl.expm

__all__ = ["BACKEND", "schur", "eig", "eig_hermitian", "cpqr", "solve",
           "expm", "pyref"]
