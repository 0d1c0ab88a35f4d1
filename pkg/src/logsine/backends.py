"""Kernel backend selection.

Two interchangeable kernel modules exist: a numba-jitted one and a pure
numpy fallback. LOGSINE_BACKEND=numpy forces the fallback, =numba demands
the jitted module and raises if numba cannot be imported; unset, numba is
used when available. Selection is re-evaluated on every call so tests can
flip the environment variable at runtime.
"""

from __future__ import annotations

import importlib
import os

_modules: dict[str, object] = {}


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except Exception:
        return False
    return True


def backend_name() -> str:
    """Resolve which backend the current environment selects."""
    env = os.environ.get("LOGSINE_BACKEND", "").strip().lower()
    if env == "numpy":
        return "numpy"
    if env == "numba":
        if not _numba_available():
            raise ImportError("LOGSINE_BACKEND=numba but numba is not importable")
        return "numba"
    if env:
        raise ValueError(f"LOGSINE_BACKEND must be 'numba' or 'numpy', got {env!r}")
    return "numba" if _numba_available() else "numpy"


def get_kernels(name: str | None = None):
    """Return the kernel module for ``name`` (default: environment choice)."""
    name = name or backend_name()
    if name not in _modules:
        _modules[name] = importlib.import_module(f"logsine._kernels_{name}")
    return _modules[name]
