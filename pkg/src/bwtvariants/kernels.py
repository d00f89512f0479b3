"""Kernel selection.

The hot inner loops (suffix sorting, rotation sorting, the feasibility
census, and the distance loops) exist twice: a compiled Cython module
``_native`` and a pure-Python module ``_fallback`` with identical
behaviour. The compiled one is preferred when it imported cleanly; set
the environment variable ``BWTVARIANTS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("BWTVARIANTS_PURE"):
    from . import _fallback as _impl
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND: str = _impl.BACKEND

suffix_array = _impl.suffix_array
conjugate_sort = _impl.conjugate_sort
shared_suffix_mask = _impl.shared_suffix_mask
feasible_image_size = _impl.feasible_image_size
edit_distance = _impl.edit_distance
hamming = _impl.hamming
