"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``DUCLAB_PURE=1`` to force the numpy path.
"""
from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
_impl = _fallback
if not os.environ.get("DUCLAB_PURE"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        _impl = _fallback

closure = _impl.closure
anticommuting = _impl.anticommuting


def backend_modules():
    """Both implementations that are available, keyed by name."""
    out = {"python": _fallback}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:  # pragma: no cover
        pass
    return out
