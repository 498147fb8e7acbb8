"""Kernel selection: compiled extension when built, pure Python otherwise.

Set PRONAUDIT_PURE_PYTHON=1 to force the fallback (used by the benchmark
and the kernel-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("PRONAUDIT_PURE_PYTHON") == "1":
    from . import _fallback as _impl
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
        BACKEND = "c"
    except ImportError:
        from . import _fallback as _impl
        BACKEND = "python"

find_token_runs = _impl.find_token_runs
scan_longest = _impl.scan_longest
