"""Pick the compiled kernels when available.

Set ``HWPKIT_PURE_PYTHON=1`` to force the pure-Python implementation.
"""
import os

from . import _kernels_py

if os.environ.get("HWPKIT_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND


def available():
    """Every importable kernel module, fallback first."""
    mods = [_kernels_py]
    try:
        from . import _kernels
        mods.append(_kernels)
    except ImportError:
        pass
    return mods
