"""Kernel backend selection.

Imports the compiled extension when it was built, otherwise the pure-Python
twin. Set ZTOP_PURE_KERNELS=1 to force the pure backend (used by the
benchmark and the parity tests).
"""

import os

if os.environ.get("ZTOP_PURE_KERNELS") == "1":
    from ztop import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from ztop import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from ztop import _kernels_py as _impl

        BACKEND = "python"

nearest_int_div = _impl.nearest_int_div
wrap_half = _impl.wrap_half
decompose_digits = _impl.decompose_digits
coefficient_checks = _impl.coefficient_checks
member_direct_scan = _impl.member_direct_scan
member_partial_scan = _impl.member_partial_scan
