"""Tour of the four families of area densities shared by two minimal graphs.

A graph z = u(x, y) is minimal when it satisfies the minimal surface
equation, and its area density is F = sqrt(1 + |grad u|^2).  Prescribing F
overdetermines u; this script walks through the four density families for
which two genuinely different graphs share the same F, and verifies the
defining properties numerically.
"""

import math

from densitylab import minimal_graphs as mg

print(__doc__)

# ----------------------------------------------------------------------
print("1. Constant density: a circle of tilted planes")
print("-" * 60)
fam = mg.ConstantPlane(2.0)
print(f"   F = 2 everywhere; planes u = sqrt(3) (cos(psi) x + sin(psi) y).")
for psi in (0.0, 1.0):
    us = mg.reconstruct_u([(0, 0), (1, 0), (1, 1)], fam, psi=psi)
    print(f"   psi = {psi}: reconstructed heights {[round(u, 6) for u in us]}")
print()

# ----------------------------------------------------------------------
print("2. F = coth x: pieces of Scherk's fifth surface")
print("-" * 60)
x, y = 1.2, 0.7
u, theta = mg.scherk_closed_form(x, y)
print(f"   at ({x}, {y}): u = {u:.6f}, slope angle theta = {theta:.6f}")
print(f"   implicit equation sinh(x) sinh(u) - cos(y) = "
      f"{math.sinh(x) * math.sinh(u) - math.cos(y):.2e}")
uj = mg.scherk_u_jet(x, y, order=2)
print(f"   minimal surface residual (analytic jet): "
      f"{mg.minimal_residual(uj):.2e}")
F = mg.density_value(mg.ScherkFifth(), x, y)
print(f"   density identity 1 + |grad u|^2 - F^2 = "
      f"{1 + uj.dx**2 + uj.dy**2 - F*F:.2e}")
print("   The whole one-parameter family u(x, y + psi) shares F = coth x.")
print()

# ----------------------------------------------------------------------
print("3. The heli-catenoid family (radial densities)")
print("-" * 60)
phi = math.pi / 4
fam = mg.HeliCatenoid(phi)
print(f"   phi = pi/4; domain r^2 > sin^2(phi) = {math.sin(phi)**2:.3f}")
pt = (1.0, 0.4)
muj = mg.mu_jet(fam, *pt)
data = mg.compatibility_data(muj)
print(f"   at {pt}: slope-relation discriminant P = {data.P:.6f} > 0,")
print("   so exactly two slope angles solve the compatibility relation:")
for label, (c2, s2) in zip("+-", mg.two_theta_solutions(muj)):
    print(f"     branch {label}: (cos 2th, sin 2th) = ({c2:+.6f}, {s2:+.6f})")
path = [(0.9 + 0.01 * k, 0.3 + 0.005 * k) for k in range(41)]
up = mg.reconstruct_u(path, fam, branch=1)
dn = mg.reconstruct_u(path, fam, branch=-1)
print(f"   reconstructed branch heights at path end: u+ = {up[-1]:.6f}, "
      f"u- = {dn[-1]:.6f}")
print("   (upper and lower sheets of the heli-catenoid; neither u+ - u- nor")
print("    u+ + u- is constant, so the graphs are genuinely inequivalent)")
print()

# ----------------------------------------------------------------------
print("4. Doubly periodic densities C = a cosh x + c cos y")
print("-" * 60)
a, c = 1.0, 1.0
fam = mg.DoublyPeriodic(a, c)
print(f"   admissibility strip: |a - c| < 1 < a + c; here a = c = 1.")
fi = mg.first_integrals(mg.family_C_jet(fam, 0.7, 0.3))
print(f"   first integrals (a1, a2, a3) = ({fi.a1:.2e}, {fi.a2:.6f}, "
      f"{fi.a3:.6f})  [expected (0, 1, a^2 - c^2)]")
res = mg.c_system_residual(mg.family_C_jet(fam, 0.7, 0.3))
print(f"   closure-system residuals: max {max(abs(v) for v in res):.2e}")
probe = (0.5, -0.2)
up = mg.reconstruct_u([probe, (0.8, -0.2), (0.8, 0.3)], fam, branch=1)
dn = mg.reconstruct_u([probe, (0.8, -0.2), (0.8, 0.3)], fam, branch=-1)
print(f"   branch heights over a staircase path: u+ = {up[-1]:.6f}, "
      f"u- = {dn[-1]:.6f}")
print()
print("Each family's two branches induce the same area form; the library's")
print("acceptance suite certifies the density match to 1e-8.")
