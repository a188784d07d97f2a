"""Backend selection for the enumeration kernels.

The compiled module is used when it was built and ``CHROMFOREST_PURE`` is
unset; otherwise the pure-Python twin is imported. Both expose the same
functions, so callers never branch on the backend.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("CHROMFOREST_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

connected_subsets = _impl.connected_subsets
classical_coefficients = _impl.classical_coefficients
signed_connected_sum = _impl.signed_connected_sum
connected_spanning_masks = _impl.connected_spanning_masks
spanning_tree_masks = _impl.spanning_tree_masks
forests = _impl.forests
minimal_tree_extension = _impl.minimal_tree_extension
count_colorings = _impl.count_colorings


def available_backends() -> dict:
    """Map backend name to module for every importable implementation."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
