"""Pick the compiled kernels when available, else the pure-Python ones."""
import os

if os.environ.get("KOSHLAB_PURE_PYTHON") == "1":
    from . import _kernels_py as kernels

    COMPILED = False
else:
    try:
        from . import _kernels as kernels

        COMPILED = True
    except ImportError:  # no compiled extension in this install
        from . import _kernels_py as kernels

        COMPILED = False

__all__ = ["kernels", "COMPILED"]
