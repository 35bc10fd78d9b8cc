"""Pick the reduction kernel: compiled if built, else pure Python.

Set FIBERCALC_PURE=1 to force the Python kernel.
"""
import os

from . import _pykernel

if os.environ.get("FIBERCALC_PURE", "") not in ("", "0"):
    kernel = _pykernel
else:
    try:
        from . import _ckernel as kernel
    except ImportError:
        kernel = _pykernel

normal_form = kernel.normal_form
spoly = kernel.spoly
IMPLEMENTATION = kernel.IMPLEMENTATION
