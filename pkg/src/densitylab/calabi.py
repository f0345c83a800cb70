"""Calabi's band-metric Lagrangian and its compatibility coefficients.

In a region crossed by three bands of calibrated geodesics, the third
calibration z(x, y) of an extremal metric must be a critical point of

    L(p, q) = 2 p q / sqrt((2pq)^2 - (p^2 + q^2 - 1)^2),    (p, q) = grad z,

and prescribing the area density L = F = 1/sin(2 phi) confines the gradient
to the ellipse p^2 - 2 cos(2 phi) p q + q^2 = 1, parametrized by an angle
theta.  Closedness of the gradient form p dx + q dy and of the
Euler-Lagrange form psi then determine d(2 theta) as an affine expression

    d(2 theta) = cos(2 theta) w1 + sin(2 theta) w2 + w3

in 1-forms w_i built from phi and its first derivatives, and d(d 2theta) = 0
produces the obstruction A1 cos(2 theta) + A2 sin(2 theta) + A3 = 0.

The closed forms of w_i and A_i are never derived symbolically here (the
expression swell is the reason they are unprinted anywhere); instead they
are extracted exactly by probing the affine structure at three angles, with
every derivative taken analytically through the jet algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BranchCollision,
    DegenerateAllZero,
    NotPositiveDefinite,
    ParamViolation,
    RangeViolation,
    Singularity,
    SingularSystem,
)
from .jets import Jet, jet_acos, jet_atan2, jet_cos, jet_sin, jet_sqrt

TOL_SING = 1e-12


@dataclass(frozen=True)
class GradientPair:
    """A gradient (p, q) = (z_x, z_y) in the Lagrangian's domain.

    The domain of L is radicand positivity, p + q > 1 and |p - q| < 1
    (with the reflection normalization p, q > 0); on the prescribed-density
    ellipse that is exactly the angle window |theta| < pi/2 - phi.  The
    stricter ellipticity of the Euler-Lagrange operator, p^2 + q^2 > 1 and
    |p^2 - q^2| < 1, holds on the sub-arc |theta| < phi and is exposed as
    :meth:`strictly_elliptic`.
    """

    p: float
    q: float

    def validate(self) -> None:
        p, q = self.p, self.q
        if not (p > 0.0 and q > 0.0):
            raise RangeViolation("normalized branch requires p, q > 0")
        if not (p + q > 1.0 and abs(p - q) < 1.0):
            raise RangeViolation(
                f"(p, q) = ({p}, {q}) outside the Lagrangian domain")

    def strictly_elliptic(self) -> bool:
        p2, q2 = self.p ** 2, self.q ** 2
        return p2 + q2 > 1.0 and abs(p2 - q2) < 1.0


@dataclass(frozen=True)
class CompatibilityData:
    """Extracted 1-form coefficients w_i = (dx, dy) and obstruction A_i."""

    omega1: tuple[float, float]
    omega2: tuple[float, float]
    omega3: tuple[float, float]
    A1: float
    A2: float
    A3: float


def _radicand(p, q):
    """(2pq)^2 - (p^2+q^2-1)^2, on jets or floats."""
    return 4.0 * p * p * q * q - (p * p + q * q - 1.0) ** 2


def lagrangian_L(g: GradientPair) -> float:
    """Band-metric area density 2pq/sqrt((2pq)^2 - (p^2+q^2-1)^2) >= 1."""
    g.validate()
    r = _radicand(g.p, g.q)
    if r <= TOL_SING:
        raise Singularity(f"radicand {r} at the boundary conic")
    return 2.0 * g.p * g.q / math.sqrt(r)


def band_metric(F: Jet) -> tuple[float, float]:
    """Off-diagonal coefficient f and area density of the band metric.

    The metric making dx, dy and dz = F_x dx + F_y dy all unit-length is
    |alpha dx + beta dy|^2 = alpha^2 + beta^2 + 2 f alpha beta with
    f = (1 - F_x^2 - F_y^2)/(2 F_x F_y); it is positive definite iff
    |f| < 1, and its area density is the Lagrangian at (F_x, F_y).
    """
    if F.order < 1:
        raise ParamViolation("F jet must carry first derivatives")
    fx, fy = F.dx, F.dy
    if abs(fx * fy) < TOL_SING:
        raise Singularity("F_x F_y vanishes; band metric undefined")
    f = (1.0 - fx * fx - fy * fy) / (2.0 * fx * fy)
    if abs(f) >= 1.0:
        raise NotPositiveDefinite(f"|f| = {abs(f)} >= 1")
    r = _radicand(fx, fy)
    density = 2.0 * fx * fy / math.sqrt(r)
    return f, density


def ellipse_param(phi: float, theta: float) -> GradientPair:
    """Gradient on the prescribed-density ellipse at angle theta.

    p = cos(theta - phi)/sin(2 phi), q = cos(theta + phi)/sin(2 phi);
    the pair satisfies p^2 - 2 cos(2 phi) p q + q^2 = 1 identically and
    sweeps the elliptic arc between (1, 0) and (0, 1) as theta runs over
    |theta| < pi/2 - phi.
    """
    if not 0.0 < phi < math.pi / 4.0:
        raise RangeViolation(f"phi must lie in (0, pi/4), got {phi}")
    if not abs(theta) < math.pi / 2.0 - phi:
        raise RangeViolation(f"|theta| must be < pi/2 - phi, got {theta}")
    s = math.sin(2.0 * phi)
    return GradientPair(math.cos(theta - phi) / s, math.cos(theta + phi) / s)


def psi_components(g: GradientPair) -> tuple[float, float]:
    """Components of the Euler-Lagrange 1-form psi at a gradient point.

    psi = [N1(p,q) dx + N2(p,q) dy] / radicand^(3/2) with
    N1 = (p^4 - q^4 - 2p^2 + 1) p and N2 = -(q^4 - p^4 - 2q^2 + 1) q;
    closedness of psi is the Euler-Lagrange equation.
    """
    g.validate()
    px, py = _psi_raw(g.p, g.q)
    return px, py


def _psi_raw(p, q):
    """psi components on jets or floats, no range guard."""
    r = _radicand(p, q)
    rv = r.value if isinstance(r, Jet) else r
    if rv <= TOL_SING:
        raise Singularity(f"radicand {rv} at the boundary conic")
    n1 = (p ** 4 - q ** 4 - 2.0 * p * p + 1.0) * p
    n2 = -(q ** 4 - p ** 4 - 2.0 * q * q + 1.0) * q
    if isinstance(r, Jet):
        den = jet_sqrt(r)
        den3 = den * den * den
    else:
        den3 = r ** 1.5
    return n1 / den3, n2 / den3


def el_residual(z: Jet) -> float:
    """Euler-Lagrange residual: the dx^dy coefficient of d(psi) for z.

    Built by analytic chain rule: (p, q) = (z_x, z_y) carry one derivative
    order less than z, psi components become order-1 jets in (x, y), and
    the residual is d/dx(psi_y) - d/dy(psi_x).  Zero iff z is extremal at
    the point.
    """
    if z.order < 2:
        raise ParamViolation("z jet must carry second derivatives")
    p = z.deriv("x")
    q = z.deriv("y")
    # only radicand positivity is needed here; the reflected quadrant
    # (p, q) -> (-p, -q) is admitted so the oddness symmetry is testable
    psi_x, psi_y = _psi_raw(p, q)
    return psi_y.dx - psi_x.dy


def _closedness_solve(phi: Jet, theta: float):
    """Solve the two closedness conditions for the theta-gradient jets.

    Returns (theta_x, theta_y) as jets of order phi.order - 1.  The two
    scalar equations are closedness of p dx + q dy and closedness of psi,
    expanded by the chain rule with theta held at the probe value:

        -q_th tx + p_th ty = q_ph phi_x - p_ph phi_y
        alpha tx - beta ty = -gamma phi_x + delta phi_y

    with alpha = psi_y,p p_th + psi_y,q q_th (etc. for beta, gamma, delta).
    """
    if phi.order < 1:
        raise ParamViolation("phi jet must carry first derivatives")
    if not 0.0 < phi.value < math.pi / 4.0:
        raise RangeViolation(
            f"phi value must lie in (0, pi/4), got {phi.value}")
    k = phi.order - 1
    ph = phi.truncate(k)
    # coefficient fields of the chain rule, as jets of order k
    s2 = jet_sin(2.0 * ph)
    c_m = jet_cos(Jet.constant(theta, k) - ph)   # cos(theta - phi)
    s_m = jet_sin(Jet.constant(theta, k) - ph)
    c_p = jet_cos(Jet.constant(theta, k) + ph)
    s_p = jet_sin(Jet.constant(theta, k) + ph)
    c2 = jet_cos(2.0 * ph)
    p = c_m / s2
    q = c_p / s2
    p_th = -s_m / s2
    q_th = -s_p / s2
    p_ph = s_m / s2 - 2.0 * c2 * c_m / (s2 * s2)
    q_ph = -s_p / s2 - 2.0 * c2 * c_p / (s2 * s2)

    # psi partials in (p, q), as jets through the field jets p, q
    r = _radicand(p, q)
    if r.value <= TOL_SING:
        raise Singularity("radicand vanished along the probe")
    n1 = (p ** 4 - q ** 4 - 2.0 * p * p + 1.0) * p
    n2 = -(q ** 4 - p ** 4 - 2.0 * q * q + 1.0) * q
    n1_p = 5.0 * p ** 4 - q ** 4 - 6.0 * p * p + 1.0
    n1_q = -4.0 * q ** 3 * p
    n2_p = 4.0 * p ** 3 * q
    n2_q = -(5.0 * q ** 4 - p ** 4 - 6.0 * q * q + 1.0)
    r_p = 4.0 * p * (q * q - p * p + 1.0)
    r_q = 4.0 * q * (p * p - q * q + 1.0)
    den = jet_sqrt(r)
    r52 = den * den * den * den * den
    psi_x_p = (n1_p * r - 1.5 * n1 * r_p) / r52
    psi_x_q = (n1_q * r - 1.5 * n1 * r_q) / r52
    psi_y_p = (n2_p * r - 1.5 * n2 * r_p) / r52
    psi_y_q = (n2_q * r - 1.5 * n2 * r_q) / r52

    alpha = psi_y_p * p_th + psi_y_q * q_th
    beta = psi_x_p * p_th + psi_x_q * q_th
    gamma = psi_y_p * p_ph + psi_y_q * q_ph
    delta = psi_x_p * p_ph + psi_x_q * q_ph

    phx = phi.deriv("x")
    phy = phi.deriv("y")
    b1 = q_ph * phx - p_ph * phy
    b2 = -gamma * phx + delta * phy

    det = (-q_th) * (-beta) - p_th * alpha
    if abs(det.value) < TOL_SING:
        raise SingularSystem(f"closedness system determinant {det.value}")
    tx = (b1 * (-beta) - p_th * b2) / det
    ty = ((-q_th) * b2 - alpha * b1) / det
    return tx, ty


def theta_gradient_calabi(phi: Jet, theta: float) -> tuple[float, float]:
    """Gradient of the compatible angle field at a point, given phi's jet.

    The result is affine in (cos 2 theta, sin 2 theta); the coefficients
    are the unprinted 1-forms recovered by :func:`compatibility_extract`.
    """
    tx, ty = _closedness_solve(phi, theta)
    return tx.value, ty.value


_PROBES_2T = (0.0, 0.5 * math.pi, math.pi)  # probe values of 2*theta


def _omega_jets(phi: Jet):
    """The three 1-form coefficient jets (w1, w2, w3), each an (x, y) pair."""
    g = []
    for t2 in _PROBES_2T:
        tx, ty = _closedness_solve(phi, 0.5 * t2)
        g.append((2.0 * tx, 2.0 * ty))
    w1 = tuple(0.5 * (g[0][i] - g[2][i]) for i in range(2))
    w3 = tuple(0.5 * (g[0][i] + g[2][i]) for i in range(2))
    w2 = tuple(g[1][i] - w3[i] for i in range(2))
    return w1, w2, w3


def compatibility_extract(phi: Jet) -> CompatibilityData:
    """Recover the affine data (w_i, A_i) of the angle compatibility system.

    w_i come from probing d(2 theta) at 2 theta in {0, pi/2, pi}; the
    obstruction coefficients come from probing the total 2-form

        T(t) = cos(t) (dw1 - w2^w3) + sin(t) (dw2 + w1^w3) + (dw3 + w1^w2)

    at the same angles, which is exactly the dx^dy coefficient of
    d(d 2theta) after substituting the affine expression for d(2 theta).
    """
    if phi.order < 2:
        raise ParamViolation("phi jet must carry second derivatives")
    w1, w2, w3 = _omega_jets(phi)

    def d_of(w):
        # exterior derivative coefficient of w = wx dx + wy dy
        return w[1].dx - w[0].dy

    def wedge(u, v):
        return u[0].value * v[1].value - u[1].value * v[0].value

    t_at = {}
    for t2 in _PROBES_2T:
        t_at[t2] = (math.cos(t2) * (d_of(w1) - wedge(w2, w3))
                    + math.sin(t2) * (d_of(w2) + wedge(w1, w3))
                    + (d_of(w3) + wedge(w1, w2)))
    A1 = 0.5 * (t_at[0.0] - t_at[math.pi])
    A3 = 0.5 * (t_at[0.0] + t_at[math.pi])
    A2 = t_at[0.5 * math.pi] - A3

    def vals(w):
        return (w[0].value, w[1].value)

    return CompatibilityData(vals(w1), vals(w2), vals(w3), A1, A2, A3)


def two_theta_candidates(phi: Jet) -> list[float]:
    """Angles theta in the elliptic range solving the obstruction equation.

    Solves A1 cos(2 th) + A2 sin(2 th) + A3 = 0 subject to
    |th| < pi/2 - phi; there are never more than two.  Raises
    DegenerateAllZero when all coefficients vanish (constant-phi route).
    """
    data = compatibility_extract(phi)
    return candidates_from_coefficients(data.A1, data.A2, data.A3, phi.value)


def candidates_from_coefficients(A1: float, A2: float, A3: float,
                                 phi_value: float,
                                 tol: float = TOL_SING) -> list[float]:
    """Range-filtered solutions of A1 cos(2th) + A2 sin(2th) + A3 = 0."""
    amp = math.hypot(A1, A2)
    scale = max(abs(A1), abs(A2), abs(A3))
    if scale < tol:
        raise DegenerateAllZero("A1 = A2 = A3 = 0 within tolerance")
    if abs(A3) > amp:
        return []
    base = math.atan2(A2, A1)
    beta = math.acos(max(-1.0, min(1.0, -A3 / amp)))
    half_window = math.pi / 2.0 - phi_value
    out = []
    for t2 in (base + beta, base - beta):
        for k in (-2, -1, 0, 1, 2):
            th = 0.5 * t2 + k * math.pi
            if abs(th) < half_window:
                if all(abs(th - o) > 1e-9 for o in out):
                    out.append(th)
    out.sort()
    if len(out) > 2:
        raise ParamViolation(f"impossible candidate count {len(out)}")
    return out


def third_order_residual(phi: Jet, theta_branch: float) -> tuple[float, float]:
    """Residual of d(2 theta^+-) against the affine expression, per branch.

    The branch angle is differentiated analytically through the phi jet
    (requires order 3): the obstruction coefficients become order-1 jets,
    the branch formula 2 theta = atan2(A2, A1) +- acos(-A3/|A|) is composed
    in jet arithmetic, and the residual pair

        d(2 theta) - (cos(2 th) w1 + sin(2 th) w2 + w3)

    is returned.  Both components vanish exactly when phi satisfies the
    third-order closure system; generically they do not.
    """
    if phi.order < 3:
        raise ParamViolation("phi jet must carry third derivatives")

    # obstruction coefficients as order-1 jets: rebuild the probe pipeline
    # one order higher, so each T(probe) is itself a jet
    w1, w2, w3 = _omega_jets(phi)          # order-2 component jets

    def d_of_jet(w):
        return w[1].deriv("x") - w[0].deriv("y")

    def wedge_jet(u, v):
        return u[0] * v[1] - u[1] * v[0]

    t_jets = {}
    for t2 in _PROBES_2T:
        t_jets[t2] = (math.cos(t2) * (d_of_jet(w1) - wedge_jet(w2, w3).truncate(1))
                      + math.sin(t2) * (d_of_jet(w2) + wedge_jet(w1, w3).truncate(1))
                      + (d_of_jet(w3) + wedge_jet(w1, w2).truncate(1)))
    A1 = 0.5 * (t_jets[0.0] - t_jets[math.pi])
    A3 = 0.5 * (t_jets[0.0] + t_jets[math.pi])
    A2 = t_jets[0.5 * math.pi] - A3

    amp2 = A1 * A1 + A2 * A2
    if amp2.value < TOL_SING:
        raise DegenerateAllZero("A1 = A2 = 0 within tolerance")
    amp = jet_sqrt(amp2)
    ratio = -A3 / amp
    if 1.0 - ratio.value ** 2 < 1e-10:
        raise BranchCollision("candidate branches merge (acos argument at +-1)")
    base = jet_atan2(A2, A1)
    beta = jet_acos(ratio)

    # pick the branch matching the requested angle value
    best = None
    for sign in (1.0, -1.0):
        t2_jet = base + sign * beta
        for k in (-2, -1, 0, 1, 2):
            th = 0.5 * t2_jet.value + k * math.pi
            err = abs(th - theta_branch)
            if best is None or err < best[0]:
                best = (err, t2_jet)
    if best[0] > 1e-6:
        raise ParamViolation(
            f"theta_branch {theta_branch} is not a candidate of this jet")
    t2_jet = best[1]

    c2, s2 = math.cos(t2_jet.value), math.sin(t2_jet.value)
    rx = t2_jet.dx - (c2 * w1[0].value + s2 * w2[0].value + w3[0].value)
    ry = t2_jet.dy - (c2 * w1[1].value + s2 * w2[1].value + w3[1].value)
    return rx, ry
