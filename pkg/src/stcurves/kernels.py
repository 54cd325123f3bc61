"""Dispatch between the compiled kernels and their pure-Python twins.

Set STCURVES_PURE=1 to force the pure implementation.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("STCURVES_PURE"):
    _impl = _kernels_py
    IMPLEMENTATION = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "cython"
    except ImportError:
        _impl = _kernels_py
        IMPLEMENTATION = "python"

canonical_pair = _impl.canonical_pair
canonical_key = _impl.canonical_key
is_transitive = _impl.is_transitive
expand_cosets = _impl.expand_cosets
