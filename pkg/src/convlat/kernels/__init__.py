"""Hot integer kernels with a compiled backend and a pure-Python fallback.

The compiled extension ``_ckernels`` is used when it has been built
(``python setup.py build_ext --inplace`` or an editable install); otherwise
the identical pure-Python implementation is used. Set ``CONVLAT_PURE=1`` to
force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("CONVLAT_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
dd_extreme_rays = _impl.dd_extreme_rays
simplex_max = _impl.simplex_max

__all__ = ["BACKEND", "dd_extreme_rays", "simplex_max"]
