"""Backend selection for the smoothing enumerator.

The compiled extension is used when it is importable, unless the
environment variable TANGLEKIT_PURE_PYTHON is set to a nonempty value,
in which case the pure-Python twin is forced.  Both expose the same
resolve_states function and must agree exactly; the test suite checks
this whenever the extension is available.
"""

from __future__ import annotations

import os

from ._kernel_py import resolve_states as _resolve_py

BACKEND = "python"
resolve_states = _resolve_py

if not os.environ.get("TANGLEKIT_PURE_PYTHON"):
    try:
        from ._kernel_c import resolve_states as _resolve_c  # type: ignore

        resolve_states = _resolve_c
        BACKEND = "compiled"
    except ImportError:
        pass

__all__ = ["resolve_states", "BACKEND"]
