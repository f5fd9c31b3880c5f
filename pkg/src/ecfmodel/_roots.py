from __future__ import annotations

from typing import Callable

from .core import NoConvergence


def bisect(f: Callable[[float], float], lo: float, hi: float, xtol: float, max_iter: int) -> float:
    """Bisection for a root of ``f`` bracketed by ``[lo, hi]``.

    The caller guarantees ``f(lo)`` and ``f(hi)`` do not share a strict sign.
    Stops when the bracket is narrower than ``xtol`` or can no longer be
    split in double precision.
    """
    f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    if f(hi) == 0.0:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol or mid == lo or mid == hi:
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    if hi - lo <= xtol:
        return 0.5 * (lo + hi)
    raise NoConvergence(f"bisection did not reach width {xtol} in {max_iter} iterations")
