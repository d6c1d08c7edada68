"""Selects the compiled coset kernel when available, else the pure-Python one."""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

DEFAULT_BACKEND = "compiled" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def get_kernel(tables: dict, backend: str | None = None):
    """Kernel instance for ``tables``; ``backend`` is "compiled", "python" or None."""
    backend = backend or os.environ.get("SQINT_BACKEND") or DEFAULT_BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        return _compiled.CosetKernel(tables)
    if backend == "python":
        return _kernel_py.CosetKernel(tables)
    raise ValueError(f"unknown backend {backend!r}")
