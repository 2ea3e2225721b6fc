"""Kernel selection: compiled extension when available, pure Python otherwise.

Set RSL_PURE_PYTHON=1 to force the fallback (used by the benchmark and the
equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("RSL_PURE_PYTHON"):
    from ._kernel_py import ForestStore

    IMPL = "python"
else:
    try:
        from ._kernel_cy import ForestStore  # type: ignore[no-redef]

        IMPL = "cython"
    except ImportError:
        from ._kernel_py import ForestStore  # type: ignore[no-redef]

        IMPL = "python"

__all__ = ["ForestStore", "IMPL"]
