"""Optional numba acceleration for the enumeration kernels.

Set ``K4SUB_DISABLE_JIT=1`` (or numba's own ``NUMBA_DISABLE_JIT=1``) to run the
kernels as plain Python over numpy arrays. Both paths execute the same source.
"""
import os

_disabled = os.environ.get("K4SUB_DISABLE_JIT", "") not in ("", "0") or os.environ.get(
    "NUMBA_DISABLE_JIT", ""
) not in ("", "0")

try:
    if _disabled:
        raise ImportError
    import numba

    HAVE_JIT = True

    def jit(func):
        return numba.njit(cache=True, nogil=True)(func)

except ImportError:
    HAVE_JIT = False

    def jit(func):
        return func


def pure(func):
    """Return the uncompiled Python body of a kernel."""
    return getattr(func, "py_func", func)
