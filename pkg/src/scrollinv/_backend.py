"""Select the compiled kernels when available, else the pure-Python ones.

Set ``SCROLLINV_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_kernels

compiled_kernels = None
if os.environ.get("SCROLLINV_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_kernels  # type: ignore[no-redef]
    except ImportError:
        compiled_kernels = None

kernels = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND: str = kernels.BACKEND


def sqfree_mul(a: dict, b: dict) -> dict:
    if kernels is python_kernels:
        return python_kernels.sqfree_mul(a, b)
    try:
        return kernels.sqfree_mul(a, b)
    except OverflowError:
        return python_kernels.sqfree_mul(a, b)
