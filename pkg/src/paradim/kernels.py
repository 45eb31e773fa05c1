"""Kernel selector: prefer the compiled extension, fall back to pure Python.

Set PARADIM_PURE=1 to force the pure-Python implementations (used by the
test suite to cross-check the two).
"""
import os

if os.environ.get("PARADIM_PURE") == "1":
    from ._kernels_py import kronecker, class_number_from_disc, b2_character_sum
    COMPILED = False
else:
    try:
        from ._fastkernels import (
            kronecker,
            class_number_from_disc,
            b2_character_sum,
        )
        COMPILED = True
    except ImportError:
        from ._kernels_py import (
            kronecker,
            class_number_from_disc,
            b2_character_sum,
        )
        COMPILED = False

__all__ = ["kronecker", "class_number_from_disc", "b2_character_sum", "COMPILED"]
