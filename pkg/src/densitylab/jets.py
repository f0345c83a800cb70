"""Truncated Taylor algebra in two variables up to third order.

A ``Jet`` stores the value and partial derivatives of a scalar field at a
point, up to ``order`` (0..3).  Mixed partials occupy a single slot each, so
symmetry holds by construction.  Arithmetic and the elementary functions
propagate derivatives by the chain rule, which is how every "analytic
differentiation through a formula" in this package is carried out; finite
differences are reserved for independent test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_SLOTS = ("value", "dx", "dy", "dxx", "dxy", "dyy", "dxxx", "dxxy", "dxyy", "dyyy")


@dataclass(frozen=True)
class Jet:
    """Scalar 2-jet/3-jet: value and partials of a field at a point."""

    value: float
    dx: float = 0.0
    dy: float = 0.0
    dxx: float = 0.0
    dxy: float = 0.0
    dyy: float = 0.0
    dxxx: float = 0.0
    dxxy: float = 0.0
    dxyy: float = 0.0
    dyyy: float = 0.0
    order: int = 3

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @staticmethod
    def constant(v: float, order: int = 3) -> "Jet":
        return Jet(float(v), order=order)

    @staticmethod
    def coordinate(name: str, at: float, order: int = 3) -> "Jet":
        """The jet of the coordinate function x or y at the given value."""
        if name == "x":
            return Jet(float(at), dx=1.0, order=order)
        if name == "y":
            return Jet(float(at), dy=1.0, order=order)
        raise ValueError(f"unknown coordinate {name!r}")

    @staticmethod
    def variables(x: float, y: float, order: int = 3) -> tuple["Jet", "Jet"]:
        return Jet.coordinate("x", x, order), Jet.coordinate("y", y, order)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.constant(float(other), self.order)

    def __add__(self, other) -> "Jet":
        o = self._coerce(other)
        k = min(self.order, o.order)
        return Jet(*[getattr(self, s) + getattr(o, s) for s in _SLOTS], order=k)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(*[-getattr(self, s) for s in _SLOTS], order=self.order)

    def __sub__(self, other) -> "Jet":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Jet":
        return (-self) + self._coerce(other)

    def __mul__(self, other) -> "Jet":
        f = self
        g = self._coerce(other)
        k = min(f.order, g.order)
        out = [0.0] * 10
        out[0] = f.value * g.value
        if k >= 1:
            out[1] = f.dx * g.value + f.value * g.dx
            out[2] = f.dy * g.value + f.value * g.dy
        if k >= 2:
            out[3] = f.dxx * g.value + 2.0 * f.dx * g.dx + f.value * g.dxx
            out[4] = f.dxy * g.value + f.dx * g.dy + f.dy * g.dx + f.value * g.dxy
            out[5] = f.dyy * g.value + 2.0 * f.dy * g.dy + f.value * g.dyy
        if k >= 3:
            out[6] = (f.dxxx * g.value + 3.0 * f.dxx * g.dx
                      + 3.0 * f.dx * g.dxx + f.value * g.dxxx)
            out[7] = (f.dxxy * g.value + f.dxx * g.dy + 2.0 * f.dxy * g.dx
                      + 2.0 * f.dx * g.dxy + f.dy * g.dxx + f.value * g.dxxy)
            out[8] = (f.dxyy * g.value + f.dyy * g.dx + 2.0 * f.dxy * g.dy
                      + 2.0 * f.dy * g.dxy + f.dx * g.dyy + f.value * g.dxyy)
            out[9] = (f.dyyy * g.value + 3.0 * f.dyy * g.dy
                      + 3.0 * f.dy * g.dyy + f.value * g.dyyy)
        return Jet(*out, order=k)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        o = self._coerce(other)
        return self * o._reciprocal()

    def __rtruediv__(self, other) -> "Jet":
        return self._coerce(other) * self._reciprocal()

    def __pow__(self, n: int) -> "Jet":
        if not isinstance(n, int):
            raise TypeError("jet powers must be integers; use jet_sqrt etc. otherwise")
        if n < 0:
            return (self ** (-n))._reciprocal()
        out = Jet.constant(1.0, self.order)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _reciprocal(self) -> "Jet":
        v = self.value
        return self.compose(1.0 / v, -1.0 / v**2, 2.0 / v**3, -6.0 / v**4)

    # ------------------------------------------------------------------
    # composition with a univariate function (chain rule / Faa di Bruno)
    # ------------------------------------------------------------------
    def compose(self, f0: float, f1: float, f2: float = 0.0, f3: float = 0.0) -> "Jet":
        """Apply a scalar function with derivatives f0..f3 at self.value."""
        u = self
        k = u.order
        out = [0.0] * 10
        out[0] = f0
        if k >= 1:
            out[1] = f1 * u.dx
            out[2] = f1 * u.dy
        if k >= 2:
            out[3] = f2 * u.dx * u.dx + f1 * u.dxx
            out[4] = f2 * u.dx * u.dy + f1 * u.dxy
            out[5] = f2 * u.dy * u.dy + f1 * u.dyy
        if k >= 3:
            out[6] = f3 * u.dx**3 + 3.0 * f2 * u.dx * u.dxx + f1 * u.dxxx
            out[7] = (f3 * u.dx * u.dx * u.dy
                      + f2 * (u.dxx * u.dy + 2.0 * u.dx * u.dxy) + f1 * u.dxxy)
            out[8] = (f3 * u.dx * u.dy * u.dy
                      + f2 * (u.dyy * u.dx + 2.0 * u.dy * u.dxy) + f1 * u.dxyy)
            out[9] = f3 * u.dy**3 + 3.0 * f2 * u.dy * u.dyy + f1 * u.dyyy
        return Jet(*out, order=k)

    # ------------------------------------------------------------------
    # structural helpers
    # ------------------------------------------------------------------
    def truncate(self, order: int) -> "Jet":
        vals = [getattr(self, s) for s in _SLOTS]
        if order < 3:
            vals[6:10] = [0.0] * 4
        if order < 2:
            vals[3:6] = [0.0] * 3
        if order < 1:
            vals[1:3] = [0.0] * 2
        return Jet(*vals, order=order)

    def deriv(self, name: str) -> "Jet":
        """Jet of the partial-derivative field, one order lower."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        if name == "x":
            return Jet(self.dx, self.dxx, self.dxy, self.dxxx, self.dxxy,
                       self.dxyy, order=self.order - 1)
        if name == "y":
            return Jet(self.dy, self.dxy, self.dyy, self.dxxy, self.dxyy,
                       self.dyyy, order=self.order - 1)
        raise ValueError(f"unknown coordinate {name!r}")

    def gradient(self) -> tuple[float, float]:
        return self.dx, self.dy


# ----------------------------------------------------------------------
# elementary functions on jets
# ----------------------------------------------------------------------

def jet_sin(u: Jet) -> Jet:
    s, c = math.sin(u.value), math.cos(u.value)
    return u.compose(s, c, -s, -c)


def jet_cos(u: Jet) -> Jet:
    s, c = math.sin(u.value), math.cos(u.value)
    return u.compose(c, -s, -c, s)


def jet_sinh(u: Jet) -> Jet:
    s, c = math.sinh(u.value), math.cosh(u.value)
    return u.compose(s, c, s, c)


def jet_cosh(u: Jet) -> Jet:
    s, c = math.sinh(u.value), math.cosh(u.value)
    return u.compose(c, s, c, s)


def jet_exp(u: Jet) -> Jet:
    e = math.exp(u.value)
    return u.compose(e, e, e, e)


def jet_log(u: Jet) -> Jet:
    v = u.value
    return u.compose(math.log(v), 1.0 / v, -1.0 / v**2, 2.0 / v**3)


def jet_sqrt(u: Jet) -> Jet:
    v = u.value
    r = math.sqrt(v)
    return u.compose(r, 0.5 / r, -0.25 / (v * r), 0.375 / (v * v * r))


def jet_asinh(u: Jet) -> Jet:
    v = u.value
    w = 1.0 + v * v
    return u.compose(math.asinh(v), w**-0.5, -v * w**-1.5,
                     (2.0 * v * v - 1.0) * w**-2.5)


def jet_atan(u: Jet) -> Jet:
    v = u.value
    w = 1.0 + v * v
    return u.compose(math.atan(v), 1.0 / w, -2.0 * v / w**2,
                     (6.0 * v * v - 2.0) / w**3)


def jet_acos(u: Jet) -> Jet:
    v = u.value
    w = 1.0 - v * v
    return u.compose(math.acos(v), -w**-0.5, -v * w**-1.5,
                     -(1.0 + 2.0 * v * v) * w**-2.5)


def jet_atan2(y: Jet, x: Jet) -> Jet:
    """Angle jet for the vector field (x, y); branch fixed by atan2 of values.

    Away from the origin the angle is smooth, and its derivatives never see
    the branch cut, so it suffices to shift one of the two atan forms.
    """
    if abs(x.value) >= abs(y.value):
        # atan(y/x) equals atan2 up to a constant on each half plane
        base = jet_atan(y / x)
        shift = math.atan2(y.value, x.value) - math.atan(y.value / x.value)
        return base + shift
    base = -jet_atan(x / y)
    shift = math.atan2(y.value, x.value) + math.atan(x.value / y.value)
    return base + shift
