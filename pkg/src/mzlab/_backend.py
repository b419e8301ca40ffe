"""Kernel backend selection.

Prefers the compiled extension ``mzlab._core``; falls back to the
pure-numpy mirror ``mzlab._core_py``. Set ``MZLAB_BACKEND=python`` to
force the fallback (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("MZLAB_BACKEND", "").strip().lower() == "python":
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

j0_array = _impl.j0_array
wigner_ordinary_grid = _impl.wigner_ordinary_grid
wigner_averaged_gauss_grid = _impl.wigner_averaged_gauss_grid
wigner_weighted_sum_grid = _impl.wigner_weighted_sum_grid
wigner_sample_sums_grid = _impl.wigner_sample_sums_grid


def backend_name() -> str:
    """Name of the kernel backend in use: "compiled" or "python"."""
    return BACKEND
