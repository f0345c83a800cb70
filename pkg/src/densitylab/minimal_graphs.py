"""Minimal graphs over a plane domain that share a prescribed area density.

A graph z = u(x, y) has area density F = sqrt(1 + |grad u|^2).  Writing
F = coth(mu) with mu > 0, any minimal graph with density F has

    u_x = cos(theta) / sinh(mu),      u_y = sin(theta) / sinh(mu)

for some angle field theta.  The minimal surface equation plus equality of
mixed partials force the linear relation

    (mu_xx - mu_yy) cos(2 theta) + 2 mu_xy sin(2 theta)
        = (mu_xx + mu_yy) cosh(2 mu),

whose solvability discriminant P decides how many inequivalent graphs share
the density.  In the variable C = cosh(2 mu) the closure of the system is a
simple third-order system with three first integrals, whose closed-form
solution families are implemented here: constant densities (tilted planes),
coth x (pieces of Scherk's fifth surface), the heli-catenoid radial family,
and the doubly periodic family C = a cosh x + c cos y.

Everything is a pure function; jets are supplied analytically through the
Taylor algebra in :mod:`densitylab.jets`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    DegenerateDelta,
    DomainViolation,
    FoldSingularity,
    LiftAmbiguity,
    NoRealSolution,
    ParamViolation,
    Singularity,
)
from .jets import Jet, jet_asinh, jet_cos, jet_cosh, jet_log, jet_sinh, jet_sqrt
from .quadrature import adaptive_simpson

# Default tolerances (double precision headroom; see module docstrings).
TOL_ALG = 1e-9        # algebraic residuals on analytic jets
TOL_QUAD = 1e-8       # adaptive quadrature
TOL_INTEGRAL = 1e-7   # first-integral point spread
TOL_SING = 1e-12      # singularity guards
DOMAIN_MARGIN = 1e-6  # open domains are shrunk by this margin
TOL_SURFACE = 1e-9    # on-surface residual for sample points


# ----------------------------------------------------------------------
# density families
# ----------------------------------------------------------------------

class DensityFamily:
    """Base class for the four closed-form area-density families."""

    def validate(self) -> None:
        raise NotImplementedError

    def contains(self, x: float, y: float) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantPlane(DensityFamily):
    """F identically equal to c > 1; solutions are a circle of planes."""

    c: float

    def validate(self) -> None:
        if not self.c > 1.0:
            raise ParamViolation(f"constant density must exceed 1, got {self.c}")

    def contains(self, x: float, y: float) -> bool:
        return True


@dataclass(frozen=True)
class ScherkFifth(DensityFamily):
    """F = coth x on the right half plane; the Scherk one-parameter family."""

    def validate(self) -> None:
        return None

    def contains(self, x: float, y: float) -> bool:
        return x >= DOMAIN_MARGIN


@dataclass(frozen=True)
class HeliCatenoid(DensityFamily):
    """Radial density sqrt((r^2+cos^2 phi)/(r^2-sin^2 phi)), 0 < phi < pi/2.

    Canonical scaling C = 2(x^2+y^2) + cos(2 phi).
    """

    phi: float

    def validate(self) -> None:
        if not 0.0 < self.phi < math.pi / 2.0:
            raise ParamViolation(f"phi must lie in (0, pi/2), got {self.phi}")

    def contains(self, x: float, y: float) -> bool:
        return x * x + y * y >= math.sin(self.phi) ** 2 + DOMAIN_MARGIN


@dataclass(frozen=True)
class DoublyPeriodic(DensityFamily):
    """Density built from C = a cosh x + c cos y with |a-c| < 1 < a+c."""

    a: float
    c: float

    def validate(self) -> None:
        a, c = self.a, self.c
        if not (a > 0.0 and c > 0.0 and abs(a - c) < 1.0 < a + c):
            raise ParamViolation(
                f"need a, c > 0 with |a-c| < 1 < a+c, got a={a}, c={c}")

    def contains(self, x: float, y: float) -> bool:
        return self.a * math.cosh(x) + self.c * math.cos(y) >= 1.0 + DOMAIN_MARGIN


@dataclass(frozen=True)
class SurfacePoint:
    """Point (x, y, z) of the surface z^2 = a cosh x + c cos y - 1."""

    x: float
    y: float
    z: float

    def surface_residual(self, a: float, c: float) -> float:
        return self.z * self.z - (a * math.cosh(self.x) + c * math.cos(self.y) - 1.0)


@dataclass
class LiftedAngle:
    """A sampled path together with a continuously lifted angle theta."""

    path: list
    theta: list[float] = field(default_factory=list)
    branch_sign: int = 1

    @property
    def winding(self) -> float:
        return self.theta[-1] - self.theta[0]


@dataclass(frozen=True)
class FirstIntegrals:
    a1: float
    a2: float
    a3: float


# ----------------------------------------------------------------------
# densities and the mu / C change of variables
# ----------------------------------------------------------------------

def density_value(family: DensityFamily, x: float, y: float) -> float:
    """Area density F(x, y) >= 1 of the family at a point of its domain."""
    family.validate()
    if not family.contains(x, y):
        raise DomainViolation(f"({x}, {y}) outside the domain of {family}")
    if isinstance(family, ConstantPlane):
        return family.c
    if isinstance(family, ScherkFifth):
        return 1.0 / math.tanh(x)
    if isinstance(family, HeliCatenoid):
        r2 = x * x + y * y
        return math.sqrt((r2 + math.cos(family.phi) ** 2)
                         / (r2 - math.sin(family.phi) ** 2))
    if isinstance(family, DoublyPeriodic):
        C = family.a * math.cosh(x) + family.c * math.cos(y)
        return math.sqrt((C + 1.0) / (C - 1.0))
    raise ParamViolation(f"unknown family {family!r}")


def mu_C_from_F(F: float) -> tuple[float, float]:
    """Invert F = coth(mu): returns (mu, C) with C = cosh(2 mu).

    C has the closed form (F^2+1)/(F^2-1), which is what makes the closure
    system of the compatibility analysis polynomial.
    """
    if not F > 1.0:
        raise DomainViolation(f"F must exceed 1, got {F}")
    mu = 0.5 * math.log((F + 1.0) / (F - 1.0))
    C = (F * F + 1.0) / (F * F - 1.0)
    return mu, C


def family_C_jet(family: DensityFamily, x: float, y: float, order: int = 3) -> Jet:
    """Analytic jet of C = cosh(2 mu) for the family at (x, y)."""
    family.validate()
    X, Y = Jet.variables(x, y, order)
    if isinstance(family, ConstantPlane):
        c2 = family.c * family.c
        return Jet.constant((c2 + 1.0) / (c2 - 1.0), order)
    if isinstance(family, ScherkFifth):
        return jet_cosh(2.0 * X)
    if isinstance(family, HeliCatenoid):
        return 2.0 * (X * X + Y * Y) + math.cos(2.0 * family.phi)
    if isinstance(family, DoublyPeriodic):
        return family.a * jet_cosh(X) + family.c * jet_cos(Y)
    raise ParamViolation(f"unknown family {family!r}")


def mu_jet_from_C(C: Jet) -> Jet:
    """Jet of mu = arccosh(C)/2; requires C > 1."""
    if not C.value > 1.0 + TOL_SING:
        raise DomainViolation(f"need C > 1, got {C.value}")
    return 0.5 * jet_log(C + jet_sqrt(C * C - 1.0))


def mu_jet(family: DensityFamily, x: float, y: float, order: int = 3) -> Jet:
    """Analytic jet of mu for the family at an interior domain point."""
    if not family.contains(x, y):
        raise DomainViolation(f"({x}, {y}) outside the domain of {family}")
    return mu_jet_from_C(family_C_jet(family, x, y, order))


# ----------------------------------------------------------------------
# the slope-angle system and its compatibility data
# ----------------------------------------------------------------------

def theta_gradient(mu: Jet, theta: float) -> tuple[float, float]:
    """Gradient of the angle field theta forced by the mu field.

    Solves the pair (minimal surface equation, symmetry of mixed partials
    of u) for (theta_x, theta_y):

        sinh(2mu) theta_x =  sin(2th) mu_x - (cosh(2mu) + cos(2th)) mu_y
        sinh(2mu) theta_y = -sin(2th) mu_y + (cosh(2mu) - cos(2th)) mu_x
    """
    if mu.order < 1:
        raise ParamViolation("mu jet must carry first derivatives")
    s2m = math.sinh(2.0 * mu.value)
    if abs(s2m) < TOL_SING:
        raise Singularity(f"sinh(2 mu) = {s2m} below tolerance")
    c2m = math.cosh(2.0 * mu.value)
    s2t, c2t = math.sin(2.0 * theta), math.cos(2.0 * theta)
    tx = (s2t * mu.dx - (c2m + c2t) * mu.dy) / s2m
    ty = (-s2t * mu.dy + (c2m - c2t) * mu.dx) / s2m
    return tx, ty


@dataclass(frozen=True)
class CompatibilityData:
    """Coefficients of the linear relation determining cos/sin(2 theta)."""

    coef_cos: float   # mu_xx - mu_yy
    coef_sin: float   # 2 mu_xy
    rhs: float        # (mu_xx + mu_yy) cosh(2 mu)
    P: float          # discriminant Delta - rhs^2
    Delta: float      # coef_cos^2 + coef_sin^2


def compatibility_data(mu: Jet) -> CompatibilityData:
    """Evaluate the 2-theta relation coefficients and its discriminant P."""
    if mu.order < 2:
        raise ParamViolation("mu jet must carry second derivatives")
    coef_cos = mu.dxx - mu.dyy
    coef_sin = 2.0 * mu.dxy
    rhs = (mu.dxx + mu.dyy) * math.cosh(2.0 * mu.value)
    delta = coef_cos * coef_cos + coef_sin * coef_sin
    return CompatibilityData(coef_cos, coef_sin, rhs, delta - rhs * rhs, delta)


def two_theta_solutions(mu: Jet) -> tuple[tuple[float, float], tuple[float, float]]:
    """The two (cos 2theta, sin 2theta) pairs solving the slope relation.

    The "+" branch carries +sqrt(P); for the doubly periodic family it is
    exactly the upper sheet z = +sqrt(C-1) of the double cover (the rotation
    identity in :func:`abeq_fields` makes this algebraic, not empirical).
    """
    data = compatibility_data(mu)
    if data.Delta <= TOL_SING:
        raise DegenerateDelta(f"Delta = {data.Delta} below tolerance")
    P = data.P
    if P < 0.0:
        if P > -TOL_ALG * max(data.Delta, data.rhs ** 2):
            P = 0.0
        else:
            raise NoRealSolution(f"discriminant P = {P} is negative")
    root = math.sqrt(P)
    base_c = data.coef_cos * data.rhs / data.Delta
    base_s = data.coef_sin * data.rhs / data.Delta
    perp_c = -data.coef_sin * root / data.Delta
    perp_s = data.coef_cos * root / data.Delta
    return (base_c + perp_c, base_s + perp_s), (base_c - perp_c, base_s - perp_s)


def c_system_residual(C: Jet) -> tuple[float, float, float, float]:
    """Residuals of the closed third-order system satisfied by C = cosh 2mu.

    All four vanish identically on the solution families; a generic cubic
    probe gives nonzero values.
    """
    if C.order < 3:
        raise ParamViolation("C jet must carry third derivatives")
    if abs(C.value) < TOL_SING:
        raise Singularity("C is zero within tolerance")
    v = C.value
    r1 = C.dxxx - (C.dx * C.dxx - C.dx * C.dyy + C.dy * C.dxy) / v
    r2 = C.dxxy - (C.dx * C.dxy) / v
    r3 = C.dxyy - (C.dy * C.dxy) / v
    r4 = C.dyyy - (C.dy * C.dyy - C.dy * C.dxx + C.dx * C.dxy) / v
    return r1, r2, r3, r4


def first_integrals(C: Jet) -> FirstIntegrals:
    """Three quantities constant along every solution of the C system."""
    if C.order < 2:
        raise ParamViolation("C jet must carry second derivatives")
    if abs(C.value) < TOL_SING:
        raise Singularity("C is zero within tolerance")
    a1 = C.dxy / C.value
    a2 = (C.dxx - C.dyy) / C.value
    a3 = C.value * (C.dxx + C.dyy) - C.dx ** 2 - C.dy ** 2
    return FirstIntegrals(a1, a2, a3)


# ----------------------------------------------------------------------
# Scherk's fifth surface in closed form
# ----------------------------------------------------------------------

def scherk_closed_form(x: float, y: float, psi: float = 0.0) -> tuple[float, float]:
    """Height and slope angle of the Scherk graph sinh x sinh u = cos(y+psi).

    Returns (u, theta) with u = asinh(cos(y+psi)/sinh x) and theta the
    principal angle of sinh(x) * grad(u), i.e.

        (cos theta, sin theta) ~ (-cos(y+psi) cosh x, -sin(y+psi) sinh x),

    so that grad u = (cos theta, sin theta)/sinh x holds exactly.  This is
    the branch with tan(theta) = tanh(x) tan(y+psi); the reflected branch
    describes the equivalent graph obtained by y -> -y - 2 psi.
    """
    if not x > 0.0:
        raise DomainViolation(f"need x > 0, got {x}")
    s = math.sinh(x)
    u = math.asinh(math.cos(y + psi) / s)
    theta = math.atan2(-math.sin(y + psi) * s, -math.cos(y + psi) * math.cosh(x))
    return u, theta


def scherk_u_jet(x: float, y: float, psi: float = 0.0, order: int = 3) -> Jet:
    """Analytic jet of the Scherk height u = asinh(cos(y+psi)/sinh x)."""
    if not x > 0.0:
        raise DomainViolation(f"need x > 0, got {x}")
    X, Y = Jet.variables(x, y, order)
    return jet_asinh(jet_cos(Y + psi) / jet_sinh(X))


# ----------------------------------------------------------------------
# the doubly periodic family: fields on the double cover
# ----------------------------------------------------------------------

def abeq_fields(a: float, c: float, x: float, y: float
                ) -> tuple[float, float, float, float]:
    """The four plane fields (A, B, E, Q) of the doubly periodic family.

    They satisfy A cos(2th) + B sin(2th) = E together with the exact
    identity E^2 + Q^2 (C-1) = A^2 + B^2, so the rotation by (A, B) of the
    vector (E, Q z) defines (cos 2th, sin 2th) smoothly on the surface
    z^2 = C - 1.
    """
    DoublyPeriodic(a, c).validate()
    ch, co = math.cosh(x), math.cos(y)
    A = c * c + 2.0 * a * c * ch * co + a * a - 1.0
    B = 2.0 * a * c * math.sinh(x) * math.sin(y)
    E = a * (a * a - c * c - 1.0) * ch + c * (a * a - c * c + 1.0) * co
    Q = math.sqrt((1.0 - (a - c) ** 2) * ((a + c) ** 2 - 1.0)
                  * (a * ch + c * co + 1.0))
    return A, B, E, Q


def cos_sin_two_theta(a: float, c: float, p: SurfacePoint) -> tuple[float, float]:
    """(cos 2theta, sin 2theta) at a point of the double cover."""
    if abs(p.surface_residual(a, c)) > TOL_SURFACE:
        raise DomainViolation(f"{p} is not on the surface (residual "
                              f"{p.surface_residual(a, c):.3g})")
    A, B, E, Q = abeq_fields(a, c, p.x, p.y)
    d = A * A + B * B
    if d < TOL_SING:
        raise Singularity("A^2 + B^2 vanished; fields undefined here")
    return (A * E - B * Q * p.z) / d, (B * E + A * Q * p.z) / d


def _wrap_pi(angle: float) -> float:
    """Wrap to (-pi, pi]."""
    w = math.fmod(angle + math.pi, 2.0 * math.pi)
    if w <= 0.0:
        w += 2.0 * math.pi
    return w - math.pi


def lift_theta_along(path: list[SurfacePoint], a: float, c: float,
                     seed_sign: int = 1) -> LiftedAngle:
    """Continuously lift theta along a sampled path on the double cover.

    The doubled angle is unwrapped sample to sample; a principal step of
    pi/2 or more raises LiftAmbiguity instead of guessing, since the
    winding arguments need a genuine lift.  seed_sign = -1 starts on the
    other half-angle branch, flipping (cos theta, sin theta) globally.
    """
    if seed_sign not in (1, -1):
        raise ParamViolation("seed_sign must be +1 or -1")
    if len(path) < 2:
        raise ParamViolation("path needs at least two samples")
    lifted2 = []
    for i, pt in enumerate(path):
        c2, s2 = cos_sin_two_theta(a, c, pt)
        ang = math.atan2(s2, c2)
        if i == 0:
            lifted2.append(ang)
            continue
        step = _wrap_pi(ang - lifted2[-1])
        if abs(step) >= math.pi / 2.0:
            raise LiftAmbiguity(
                f"2-theta step {step:.3f} >= pi/2 between samples {i-1} and {i}")
        lifted2.append(lifted2[-1] + step)
    offset = 0.0 if seed_sign == 1 else math.pi
    theta = [0.5 * t2 + offset for t2 in lifted2]
    return LiftedAngle(path=list(path), theta=theta, branch_sign=seed_sign)


def zeta_form(point: SurfacePoint, theta: float, a: float, c: float
              ) -> tuple[float, float]:
    """Components of the height differential (cos th, sin th)/sqrt((C-1)/2).

    Written in graph coordinates of one sheet; near the fold z = 0 the
    denominator vanishes and the graph-chart expression is singular.
    """
    w = a * math.cosh(point.x) + c * math.cos(point.y) - 1.0
    if w <= TOL_SING:
        raise FoldSingularity(f"C - 1 = {w} at the fold")
    denom = math.sqrt(0.5 * w)
    return math.cos(theta) / denom, math.sin(theta) / denom


def sigma_loop(a: float, c: float, n: int, x_section: float = 0.0
               ) -> list[SurfacePoint]:
    """Closed x = x_section section of the surface, sampled at n+1 points.

    Parametrized by rho in [0, 2 pi]: cos y = g(rho) with
    g = (1 - a')/c + (a' + c - 1) cos^2(rho)/c, a' = a cosh(x_section), and
    z = sqrt(a' + c - 1) cos(rho).  This chart is smooth through the folds.
    """
    DoublyPeriodic(a, c).validate()
    ap = a * math.cosh(x_section)
    if not ap - c < 1.0:
        raise ParamViolation(
            f"x = {x_section} section has no fold: a cosh(x0) - c = {ap - c} >= 1")
    pts = []
    zmax = math.sqrt(ap + c - 1.0)
    for k in range(n + 1):
        rho = 2.0 * math.pi * k / n
        g = (1.0 - ap) / c + (ap + c - 1.0) * math.cos(rho) ** 2 / c
        g = max(-1.0, min(1.0, g))
        ysign = 1.0 if math.sin(rho) >= 0.0 else -1.0
        y = ysign * math.acos(g)
        z = zmax * math.cos(rho)
        pts.append(SurfacePoint(x_section, y, z))
    return pts


def gamma_rectangle(a: float, c: float, R: float, n_per_edge: int = 1200
                    ) -> list[SurfacePoint]:
    """Counterclockwise boundary of [-R, R] x [0, 2 pi] on the upper sheet."""
    DoublyPeriodic(a, c).validate()

    def lift(x, y):
        C = a * math.cosh(x) + c * math.cos(y)
        return SurfacePoint(x, y, math.sqrt(C - 1.0))

    pts = []
    for k in range(n_per_edge + 1):
        pts.append(lift(-R + 2.0 * R * k / n_per_edge, 0.0))
    for k in range(1, n_per_edge + 1):
        pts.append(lift(R, 2.0 * math.pi * k / n_per_edge))
    for k in range(1, n_per_edge + 1):
        pts.append(lift(R - 2.0 * R * k / n_per_edge, 2.0 * math.pi))
    for k in range(1, n_per_edge + 1):
        pts.append(lift(-R, 2.0 * math.pi * (1.0 - k / n_per_edge)))
    return pts


def period_sigma(a: float, c: float, seed_sign: int = 1,
                 tol: float = TOL_QUAD, samples: int = 512,
                 x_section: float = 0.0) -> float:
    """Period of the height differential around the x = x_section loop.

    On the loop dx = 0 and, in the smooth chart of :func:`sigma_loop`,
    (dy/d rho)/z = 2/sqrt(c + 1 - a' + (a' + c - 1) cos^2 rho) with signed
    z, so the integrand 2 sqrt(2) sin(theta(rho)) / sqrt(...) is smooth and
    the fold crossings are invisible.  theta is the continuous lift seeded
    with the principal half-angle at rho = 0 (flip with seed_sign).
    """
    if seed_sign not in (1, -1):
        raise ParamViolation("seed_sign must be +1 or -1")
    DoublyPeriodic(a, c).validate()
    ap = a * math.cosh(x_section)
    if not ap - c < 1.0:
        raise ParamViolation(
            f"x = {x_section} section has no fold: a cosh(x0) - c = {ap - c} >= 1")
    zmax = math.sqrt(ap + c - 1.0)
    two_pi = 2.0 * math.pi

    def point_at(rho: float) -> SurfacePoint:
        g = (1.0 - ap) / c + (ap + c - 1.0) * math.cos(rho) ** 2 / c
        g = max(-1.0, min(1.0, g))
        ysign = 1.0 if math.sin(rho) >= 0.0 else -1.0
        return SurfacePoint(x_section, ysign * math.acos(g), zmax * math.cos(rho))

    # reference lift of 2 theta on a uniform grid, for branch selection
    ref_rho = [two_pi * k / samples for k in range(samples + 1)]
    ref_lift = []
    prev = None
    for rho in ref_rho:
        c2, s2 = cos_sin_two_theta(a, c, point_at(rho))
        ang = math.atan2(s2, c2)
        if prev is None:
            ref_lift.append(ang)
        else:
            step = _wrap_pi(ang - prev)
            if abs(step) >= math.pi / 2.0:
                raise LiftAmbiguity("reference grid too coarse; raise samples")
            ref_lift.append(prev + step)
        prev = ref_lift[-1]
    if abs(ref_lift[-1] - ref_lift[0]) > 1e-9:
        raise LiftAmbiguity(
            f"angle lift failed to close around the section loop "
            f"(winding residue {ref_lift[-1] - ref_lift[0]:.3g})")

    def two_theta_at(rho: float) -> float:
        c2, s2 = cos_sin_two_theta(a, c, point_at(rho))
        ang = math.atan2(s2, c2)
        t = rho / two_pi * samples
        k = min(int(t), samples - 1)
        ref = ref_lift[k] + (t - k) * (ref_lift[k + 1] - ref_lift[k])
        return ang + two_pi * round((ref - ang) / two_pi)

    offset = 0.0 if seed_sign == 1 else math.pi

    def integrand(rho: float) -> float:
        theta = 0.5 * two_theta_at(rho) + offset
        denom = math.sqrt(c + 1.0 - ap + (ap + c - 1.0) * math.cos(rho) ** 2)
        return 2.0 * math.sqrt(2.0) * math.sin(theta) / denom

    return adaptive_simpson(integrand, 0.0, two_pi, tol=tol)


# ----------------------------------------------------------------------
# reconstruction of u by path integration
# ----------------------------------------------------------------------

class _ThetaTracker:
    """Continuous (cos theta, sin theta, sinh mu) along a point sequence."""

    def __init__(self, family: DensityFamily, branch: int, psi: float):
        if branch not in (1, -1):
            raise ParamViolation("branch must be +1 or -1")
        family.validate()
        self.family = family
        self.branch = branch
        self.psi = psi
        self._prev2 = None
        self._half_offset = None

    def __call__(self, x: float, y: float) -> tuple[float, float, float]:
        fam = self.family
        if isinstance(fam, ConstantPlane):
            smu = 1.0 / math.sqrt(fam.c ** 2 - 1.0)
            s = float(self.branch)
            return s * math.cos(self.psi), s * math.sin(self.psi), smu
        if isinstance(fam, ScherkFifth):
            c1 = math.cos(y + self.psi)
            w = math.sqrt(math.sinh(x) ** 2 + c1 * c1)
            s = float(self.branch)
            return (s * (-c1 * math.cosh(x) / w),
                    s * (-math.sin(y + self.psi) * math.sinh(x) / w),
                    math.sinh(x))
        # nondegenerate families: track the doubled angle of the chosen branch
        C = family_C_jet(fam, x, y, order=2)
        mu = mu_jet_from_C(C)
        plus, minus = two_theta_solutions(mu)
        c2, s2 = plus if self.branch == 1 else minus
        ang = math.atan2(s2, c2)
        if self._prev2 is None:
            self._prev2 = ang
            self._half_offset = 0.0
        else:
            step = _wrap_pi(ang - self._prev2)
            if abs(step) >= math.pi / 2.0:
                raise LiftAmbiguity("branch angle stepped >= pi/2; refine path")
            self._prev2 += step
        theta = 0.5 * self._prev2 + self._half_offset
        smu = math.sqrt(0.5 * (C.value - 1.0))
        return math.cos(theta), math.sin(theta), smu


def reconstruct_u(path: list[tuple[float, float]], family: DensityFamily,
                  branch: int = 1, psi: float = 0.0,
                  panels: int = 2) -> list[float]:
    """Integrate du = (cos th dx + sin th dy)/sinh mu along a polyline.

    Returns the height u at every path vertex with u[0] = 0.  The branch
    selects which of the two slope-angle solutions is followed (for the
    degenerate constant and Scherk families it selects u versus -u); psi
    is the family phase for those degenerate families.
    """
    if len(path) < 2:
        raise ParamViolation("path needs at least two vertices")
    for (x, y) in path:
        if not family.contains(x, y):
            raise DomainViolation(f"path vertex ({x}, {y}) outside the domain")
    tracker = _ThetaTracker(family, branch, psi)
    n = 2 * panels
    us = [0.0]
    total = 0.0
    for (x0, y0), (x1, y1) in zip(path[:-1], path[1:]):
        dx, dy = x1 - x0, y1 - y0
        vals = []
        for k in range(n + 1):
            t = k / n
            ct, st, smu = tracker(x0 + t * dx, y0 + t * dy)
            vals.append((ct * dx + st * dy) / smu)
        acc = vals[0] + vals[-1]
        for k in range(1, n):
            acc += vals[k] * (4.0 if k % 2 else 2.0)
        total += acc / (3.0 * n)
        us.append(total)
    return us


def minimal_residual(u: Jet) -> float:
    """Normalized minimal surface equation residual of a height jet.

        [(1+u_y^2) u_xx - 2 u_x u_y u_xy + (1+u_x^2) u_yy]
            / (1 + u_x^2 + u_y^2)^(3/2)

    Zero exactly on minimal graphs.
    """
    if u.order < 2:
        raise ParamViolation("u jet must carry second derivatives")
    num = ((1.0 + u.dy ** 2) * u.dxx - 2.0 * u.dx * u.dy * u.dxy
           + (1.0 + u.dx ** 2) * u.dyy)
    return num / (1.0 + u.dx ** 2 + u.dy ** 2) ** 1.5
