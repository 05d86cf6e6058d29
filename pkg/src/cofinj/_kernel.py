"""Kernel selection: compiled extension when available, pure Python otherwise.

Set COFINJ_KERNEL=pure to force the fallback.  The compiled kernel only
handles bounds below 2^59; larger values transparently fall back, so exact
arbitrary-precision semantics are preserved either way.
"""

import os

from . import _pykernel

_ckernel = None
if os.environ.get("COFINJ_KERNEL", "").lower() not in ("pure", "py", "python"):
    try:
        from . import _ckernel as _ck

        _ckernel = _ck
    except ImportError:
        _ckernel = None


def kernel_name() -> str:
    return "c" if _ckernel is not None else "pure"


if _ckernel is None:
    compose_segments = _pykernel.compose_segments
else:

    def compose_segments(a, b):
        try:
            return _ckernel.compose_segments(a, b)
        except OverflowError:
            return _pykernel.compose_segments(a, b)
