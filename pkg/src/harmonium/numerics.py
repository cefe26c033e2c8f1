"""Small shared numerical helpers."""

import math

__all__ = ["golden_section"]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2


def golden_section(f, a, b, xtol=1e-10, max_iter=200):
    """Minimize a unimodal scalar function on [a, b] by golden-section search.

    Returns (x, f(x)) once the bracket is narrower than xtol. Derivative-free
    and robust; convergence is linear with ratio 1/phi.
    """
    if not b > a:
        raise ValueError("need b > a")
    h = b - a
    if h <= xtol:
        x = 0.5 * (a + b)
        return x, f(x)
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    for _ in range(max_iter):
        if h <= xtol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    if fc < fd:
        return c, fc
    return d, fd
