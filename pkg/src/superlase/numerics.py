"""Small scalar optimizers: golden-section minimization and bracketed roots."""

from __future__ import annotations

import math
from typing import Callable

from .errors import BracketError

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_minimize(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Golden-section search for a minimum of `f` on [a, b].

    Returns (x_min, f(x_min)). Assumes unimodality inside the bracket; on a
    multimodal function it converges to one of the local minima in the
    funnel of the probe sequence. `f` may return +inf to mask bad points.
    """
    a, b = min(a, b), max(a, b)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= rel_tol * (abs(a) + abs(b)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = c if fc < fd else d
    fx = min(fc, fd)
    return x, fx


def bisect_secant_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = 1e-10,
) -> float:
    """Root of `f` in [lo, hi] with a sign change at the endpoints.

    Bisection narrows the bracket until a secant step is safe, then the
    secant iteration polishes to `rel_tol` relative accuracy in x.
    """
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise BracketError(
            f"no sign change on [{lo:g}, {hi:g}]: f(lo)={f_lo:g}, f(hi)={f_hi:g}",
            f_lo=f_lo,
            f_hi=f_hi,
        )
    # Bisection to a 1e-4 relative bracket.
    while hi - lo > 1e-4 * (abs(lo) + abs(hi)):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    # Secant refinement, guarded to stay inside the bracket.
    x0, x1 = lo, hi
    f0, f1 = f_lo, f_hi
    for _ in range(100):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not (lo <= x2 <= hi):
            x2 = 0.5 * (lo + hi)
        f2 = f(x2)
        if f2 == 0.0 or abs(x2 - x1) <= rel_tol * abs(x2):
            return x2
        if math.copysign(1.0, f2) == math.copysign(1.0, f_lo):
            lo = x2
        else:
            hi = x2
        x0, f0 = x1, f1
        x1, f1 = x2, f2
    return x1
