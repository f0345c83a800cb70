"""Exact calculus of harmonic polynomials and the spectral dichotomy.

Everything here is exact rational arithmetic: the degree-shifting pairings,
their identities, the invariant inner product, and the recursion of squared
derived-tensor norms whose sign pattern quantizes the eigenvalues of
constant-energy eigenfunctions on positively curved space forms.
"""

from fractions import Fraction

from densitylab import harmonic as ha
from densitylab.harmonic import HarmonicElement, Poly

print(__doc__)

n = 3
x1 = HarmonicElement(Poly.variable(n, 0), 1)

print("1. the pairings on harmonic polynomials (n = 3)")
print("-" * 60)
v = ha.vee(x1, x1)
print(f"   x1 vee x1 = {v.poly!r}")
print(f"   x1 . x1   = {ha.dot(x1, x1).poly!r}")
print(f"   <x1, x1> = {ha.inner(x1, x1)},  <x1 vee x1, x1 vee x1> = "
      f"{ha.inner(v, v)}")
print()

print("2. identity suite (exact, seeded random trials)")
print("-" * 60)
for nn, d in [(3, 2), (4, 3), (5, 4)]:
    rep = ha.identity_suite(nn, d, 20, seed=nn * 100 + d)
    print(f"   n = {nn}, d = {d}: {rep['trials']} trials, "
          f"all four identities exact")
try:
    ha.identity_suite(3, 2, 5, seed=0, corrupt=True)
except ha.IdentityFailure as exc:
    print(f"   deliberately corrupted constant: {str(exc)[:48]}...")
print()

print("3. spectral recursion and the eigenvalue dichotomy (n = 3, K = 1)")
print("-" * 60)
print("   lambda | admissible m | norm sequence A_0, A_1, ...")
for lam in (0, 3, 5, 7, 8, 15):
    p = ha.SpectralParams(3, Fraction(1), Fraction(lam))
    m = ha.admissible_lambda(p)
    seq = ha.a_sequence(p, 6)
    vals = ", ".join(str(v) for v in seq.values[:5])
    tag = f"m = {m}" if m is not None else "none"
    print(f"   {lam:6} | {tag:12} | {vals}")
print()
print("   admissible eigenvalues end in exact zeros; inadmissible ones turn")
print("   negative, which is impossible for squared norms: hence the")
print("   quantization lambda = m (n + m - 1) K.")
print()

print("4. dimension bookkeeping")
print("-" * 60)
print("   dim H_m(R^4):", [ha.dim_harmonics(4, m) for m in range(6)])
print("   dim H_m(R^5):", [ha.dim_harmonics(5, m) for m in range(6)])
print("   shell sums:   dim H_m(R^(n+1)) = sum of dim H_k(R^n), k <= m:")
total = sum(ha.dim_harmonics(4, k) for k in range(4))
print(f"   e.g. sum over k <= 3 on R^4 = {total} = dim H_3(R^5) = "
      f"{ha.dim_harmonics(5, 3)}")
