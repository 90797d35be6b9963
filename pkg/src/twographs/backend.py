"""Backend selection: compiled extension if available, pure Python otherwise.

Set ``TWOGRAPHS_BACKEND=pure`` to force the fallback (used by the
benchmark and the backend-agreement tests).
"""

import os

if os.environ.get("TWOGRAPHS_BACKEND", "").lower() == "pure":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME
