"""Backend selection for the elimination kernel.

Prefers the compiled extension when it is importable; falls back to the pure
Python implementation otherwise.  ISOSTRAT_PURE=1 forces the fallback (used
by the benchmark and by tests that pin down backend equivalence).
"""

from __future__ import annotations

import os

if os.environ.get("ISOSTRAT_PURE"):
    from ._elim import rref_scaled

    BACKEND = "python"
else:
    try:
        from ._elim_c import rref_scaled  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from ._elim import rref_scaled  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["rref_scaled", "BACKEND"]
