"""Kernel dispatch: numba-jitted loops or pure-numpy fallbacks.

The hot inner kernels (im2col/col2im, 2x2 max pooling, bilinear affine
warping, separable Gaussian blur, Sobel magnitude) exist in two
implementations with identical signatures and semantics:

* ``dgcluster.backend.numba_impl`` -- ``@njit``-compiled loops
* ``dgcluster.backend.numpy_impl`` -- vectorized numpy

Selection is controlled by the ``DGCLUSTER_BACKEND`` environment variable:
``numba`` (require numba, error if unavailable), ``numpy`` (force the
fallback), or ``auto`` (default: numba if importable, else numpy).

``benchmarks/bench_kernels.py`` times both paths side by side.
"""

import os

_CHOICE = os.environ.get("DGCLUSTER_BACKEND", "auto").lower()

if _CHOICE not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"DGCLUSTER_BACKEND must be 'auto', 'numba' or 'numpy', got {_CHOICE!r}"
    )

if _CHOICE == "numpy":
    from . import numpy_impl as _impl

    ACTIVE = "numpy"
else:
    try:
        from . import numba_impl as _impl

        ACTIVE = "numba"
    except ImportError:
        if _CHOICE == "numba":
            raise
        from . import numpy_impl as _impl

        ACTIVE = "numpy"

im2col = _impl.im2col
col2im_add = _impl.col2im_add
maxpool2_forward = _impl.maxpool2_forward
maxpool2_backward = _impl.maxpool2_backward
affine_warp = _impl.affine_warp
gaussian_blur = _impl.gaussian_blur
sobel_magnitude = _impl.sobel_magnitude

__all__ = [
    "ACTIVE",
    "im2col",
    "col2im_add",
    "maxpool2_forward",
    "maxpool2_backward",
    "affine_warp",
    "gaussian_blur",
    "sobel_magnitude",
]
