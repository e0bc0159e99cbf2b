"""Enumeration kernels used by the brute-force oracle.

The compiled module :mod:`eqmotive._ckernels` is used when it was built;
otherwise the pure-Python implementation in :mod:`eqmotive._pykernels` is
selected.  Set ``EQMOTIVE_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("EQMOTIVE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

rank_mod_p = _impl.rank_mod_p
profile_histogram = _impl.profile_histogram
decode = _pykernels.decode

__all__ = ["BACKEND", "rank_mod_p", "profile_histogram", "decode"]
