"""Adaptive Simpson quadrature with interval bisection.

Kept deliberately small: the integrands in this package are smooth once
parametrized correctly, so classic Simpson with Richardson correction and
a depth cap is all that is needed.
"""

from __future__ import annotations

from typing import Callable

from .errors import QuadratureFailure

DEFAULT_TOL = 1e-8


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h * (fa + 4.0 * fm + fb) / 6.0


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tol: float = DEFAULT_TOL, max_depth: int = 30) -> float:
    """Integrate f over [a, b] to absolute tolerance tol."""
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = _simpson(fa, fm, fb, b - a)
    return _recurse(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _recurse(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureFailure(
            f"tolerance {tol:g} not met on [{a:g}, {b:g}] (residual {abs(delta):.3g})")
    half = 0.5 * tol
    return (_recurse(f, a, m, fa, flm, fm, left, half, depth - 1)
            + _recurse(f, m, b, fm, frm, fb, right, half, depth - 1))


def composite_simpson(f: Callable[[float], float], a: float, b: float,
                      panels: int) -> float:
    """Fixed-panel Simpson rule (panels >= 1), for short smooth legs."""
    n = 2 * panels
    h = (b - a) / n
    total = f(a) + f(b)
    for i in range(1, n):
        total += f(a + i * h) * (4.0 if i % 2 else 2.0)
    return total * h / 3.0
