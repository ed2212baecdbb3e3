"""Kernel backend selection.

The compiled extension is preferred when importable; set the environment
variable ``LOCDIM_PURE_PYTHON=1`` to force the numpy fallback.  Both
backends implement identical contracts (documented in ``_pykernels``),
and ``point_stack_weight`` is numpy-only since searchsorted is already
compiled.
"""
from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import point_stack_weight  # noqa: F401  (shared)

if os.environ.get("LOCDIM_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

word_offsets = _impl.word_offsets
profile_cells = _impl.profile_cells
coverage_sup_levels = _impl.coverage_sup_levels
coverage_min_levels = _impl.coverage_min_levels
pointwise_weight = _impl.pointwise_weight
