"""Bitset kernels, compiled when available.

The Cython module ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` stands in with identical results.  Setting
``TARRECON_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_impl = _pykernels
BACKEND = "python"
if os.environ.get("TARRECON_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

closed_nbhd = _impl.closed_nbhd
close_standard = _impl.close_standard
close_skew = _impl.close_skew
close_psd = _impl.close_psd
connected_within = _impl.connected_within
is_fort = _impl.is_fort
has_private_fort = _impl.has_private_fort
feasible_one = _impl.feasible_one
feasible_table = _impl.feasible_table
extremal_sets = _impl.extremal_sets
degree_table = _impl.degree_table
slice_connectivity = _impl.slice_connectivity


def available_backends() -> dict:
    """Map backend name to module for every importable implementation."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
