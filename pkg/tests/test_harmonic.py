"""Exact harmonic polynomial calculus: no tolerances anywhere in this file."""

import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from densitylab import harmonic as ha
from densitylab.errors import (
    DegreeMismatch,
    IdentityFailure,
    NotHomogeneous,
    ParamViolation,
)
from densitylab.harmonic import HarmonicElement, Poly


def x(i, n=3):
    return HarmonicElement(Poly.variable(n, i), 1)


# ----------------------------------------------------------------------
# Laplacian and decomposition
# ----------------------------------------------------------------------

def test_laplacian_examples():
    n = 3
    assert ha.laplacian(Poly(n, {(2, 0, 0): 1})) == Poly(n, {(0, 0, 0): -2})
    assert ha.laplacian(Poly.radius_squared(n)) == Poly(n, {(0, 0, 0): -2 * n})
    assert ha.laplacian(Poly(n, {(2, 0, 0): 2, (0, 2, 0): -1, (0, 0, 2): -1})) \
        .is_zero()


def test_decompose_examples():
    n = 3
    h, r = ha.harmonic_decompose(Poly.radius_squared(n))
    assert h.poly.is_zero() and r == Poly.one(n)
    h, r = ha.harmonic_decompose(Poly(n, {(2, 0, 0): 1}))
    assert h.poly == Poly(n, {(2, 0, 0): Fraction(2, 3), (0, 2, 0): Fraction(-1, 3),
                              (0, 0, 2): Fraction(-1, 3)})
    assert r == Poly(n, {(0, 0, 0): Fraction(1, 3)})


def test_decompose_idempotent_on_harmonics():
    rng = random.Random(11)
    for n in (3, 4, 5):
        f = ha.random_harmonic(n, 3, rng)
        h, r = ha.harmonic_decompose(f.poly)
        assert h.poly == f.poly and r.is_zero()


def test_decompose_reconstructs_exactly():
    rng = random.Random(13)
    for n in (3, 4):
        for d in (2, 3, 4, 5, 6):
            terms = {e: rng.randint(-9, 9) for e in ha.monomial_exponents(n, d)}
            p = Poly(n, terms)
            if p.is_zero():
                continue
            h, r = ha.harmonic_decompose(p)
            assert h.poly + Poly.radius_squared(n) * r == p
            assert h.poly.analyst_laplacian().is_zero()


def test_decompose_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneous):
        ha.harmonic_decompose(Poly(3, {(1, 0, 0): 1, (0, 0, 0): 1}))


@given(st.lists(st.integers(-9, 9), min_size=15, max_size=15))
@settings(max_examples=60, deadline=None)
def test_decompose_property(coeffs):
    # p = h + R r with Delta h = 0, exactly, for arbitrary integer quartics
    exps = ha.monomial_exponents(3, 4)
    p = Poly(3, dict(zip(exps, coeffs)))
    if p.is_zero():
        return
    h, r = ha.harmonic_decompose(p)
    assert h.poly + Poly.radius_squared(3) * r == p
    assert h.poly.analyst_laplacian().is_zero()
    # uniqueness: re-decomposing the harmonic part is the identity
    h2, r2 = ha.harmonic_decompose(h.poly, 4)
    assert h2.poly == h.poly and r2.is_zero()


# ----------------------------------------------------------------------
# pairings
# ----------------------------------------------------------------------

def test_vee_dot_coordinate_example():
    v = ha.vee(x(0), x(0))
    assert v.poly == Poly(3, {(2, 0, 0): 2, (0, 2, 0): -1, (0, 0, 2): -1})
    assert ha.dot(x(0), x(0)).poly == Poly.one(3)
    f = HarmonicElement(Poly(3, {(1, 1, 0): 1}), 2)
    assert ha.dot(f, x(0)).poly == Poly.variable(3, 1)


def test_normalization_identity_random():
    rng = random.Random(5)
    for n in (3, 4, 5):
        for d in (1, 2, 3, 4):
            f = ha.random_harmonic(n, d, rng)
            xi = ha.random_linear(n, rng)
            lhs = (xi.poly * f.poly).scale(n + 2 * d - 2)
            rhs = ha.vee(f, xi).poly \
                + Poly.radius_squared(n) * f.poly.directional(xi.poly)
            assert lhs == rhs
            assert ha.vee(f, xi).poly.analyst_laplacian().is_zero()


def test_so_action_examples():
    assert ha.so_action(x(0), x(0), x(1)).poly.is_zero()  # antisymmetry
    res = ha.so_action(x(0), x(1), x(0))
    assert res.poly == Poly.variable(3, 1).scale(-1)


def test_so_action_preserves_harmonicity():
    rng = random.Random(6)
    for _ in range(10):
        f = ha.random_harmonic(4, 3, rng)
        a, b = ha.random_linear(4, rng), ha.random_linear(4, rng)
        out = ha.so_action(a, b, f)
        assert out.poly.analyst_laplacian().is_zero()
        assert out.poly.is_zero() or out.poly.homogeneous_degree() == 3


def test_inner_product_examples():
    assert ha.inner(x(0), x(0)) == 1
    assert ha.inner(x(0), x(1)) == 0
    v = ha.vee(x(0), x(0))
    assert ha.inner(v, v) == 12


def test_inner_against_sympy_oracle():
    # independent evaluation of (-Delta)^2 ((x1 vee x1)^2) / (2^2 2!)
    a, b, c = sp.symbols("a b c")
    q = 2 * a ** 2 - b ** 2 - c ** 2
    lap = lambda f: sp.diff(f, a, 2) + sp.diff(f, b, 2) + sp.diff(f, c, 2)
    val = sp.Rational(1, 8) * lap(lap(q * q))
    assert val == 12
    assert ha.inner(ha.vee(x(0), x(0)), ha.vee(x(0), x(0))) == 12


def test_inner_positive_definite_on_basis_sweep():
    from densitylab.sphere_maps import basis_Hm
    for (n, d) in [(3, 2), (3, 3), (4, 2)]:
        basis = basis_Hm(n, d)
        # Gram matrix is diagonal with positive entries: all leading
        # principal minors positive, exactly
        assert all(v > 0 for v in basis.norms)
        for i, e1 in enumerate(basis.elements):
            for e2 in basis.elements[i + 1:]:
                assert ha.inner(e1, e2) == 0


def test_inner_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        ha.inner(x(0), ha.vee(x(0), x(0)))


def test_brace_examples():
    one = HarmonicElement(Poly.one(3), 0)
    assert ha.brace(one, x(0)).poly == Poly.variable(3, 0)
    # defining property {f, g} . alpha = <f, g . alpha> on random data
    rng = random.Random(8)
    f = ha.random_harmonic(3, 2, rng)
    g = ha.random_harmonic(3, 3, rng)
    br = ha.brace(f, g)
    for i in range(3):
        alpha = x(i)
        assert br.poly.directional(alpha.poly).constant_value() == \
            ha.inner(f, ha.dot(g, alpha))


def test_brace_orthogonal_pair_vanishes():
    # g = x0 x1 x2 has g . x_i proportional to x_j x_k; pair f against an
    # orthogonal harmonic quadratic built to kill all three
    f = HarmonicElement(Poly(3, {(2, 0, 0): 2, (0, 2, 0): -1, (0, 0, 2): -1}), 2)
    g = HarmonicElement(Poly(3, {(1, 1, 1): 1}), 3)
    assert ha.brace(f, g).poly.is_zero()


def test_brace_permutation_equivariance():
    rng = random.Random(9)
    f = ha.random_harmonic(3, 2, rng)
    g = ha.random_harmonic(3, 3, rng)
    perm = [2, 0, 1]

    def permute(p):
        return Poly(p.nvars, {tuple(e[perm[i]] for i in range(p.nvars)): c
                              for e, c in p.terms.items()})

    lhs = permute(ha.brace(f, g).poly)
    rhs = ha.brace(HarmonicElement(permute(f.poly), 2),
                   HarmonicElement(permute(g.poly), 3)).poly
    assert lhs == rhs


# ----------------------------------------------------------------------
# identity suite
# ----------------------------------------------------------------------

def test_identity_suite_passes():
    rep = ha.identity_suite(3, 2, 25, seed=42)
    assert rep["all_exact"] and rep["trials"] == 25


def test_identity_suite_zero_linear_form():
    # alpha = 0 makes every side vanish; check directly on the identities
    f = ha.random_harmonic(3, 2, random.Random(10))
    zero = HarmonicElement(Poly.zero(3), 1)
    assert ha.vee(f, zero).poly.is_zero()
    assert ha.dot(f, zero).poly.is_zero()
    assert ha.so_action(zero, x(1), f).poly.is_zero()


def test_identity_suite_mutation_detected():
    with pytest.raises(IdentityFailure):
        ha.identity_suite(3, 2, 5, seed=42, corrupt=True)


def test_identity_suite_requires_n3():
    with pytest.raises(ParamViolation):
        ha.identity_suite(2, 2, 5)


# ----------------------------------------------------------------------
# spectral sequences
# ----------------------------------------------------------------------

def sp3(lam):
    return ha.SpectralParams(3, Fraction(1), Fraction(lam))


def test_b_coeff_examples():
    assert ha.b_coeff(sp3(8), 0) == Fraction(8, 3)          # lambda/(n(n-2))
    assert ha.b_coeff(sp3(8), 1) == Fraction(1, 3)
    assert ha.b_coeff(sp3(8), 2) == 0                        # numerator vanishes
    p = ha.SpectralParams(4, Fraction(2), Fraction(12))
    assert ha.b_coeff(p, 1) == Fraction(12 - 8, 6 * 4)


def test_b_coeff_zero_exactly_at_quantized_eigenvalues():
    for n in (3, 4, 5):
        for m in range(6):
            lam = Fraction(m * (n + m - 1))
            p = ha.SpectralParams(n, Fraction(1), lam)
            assert ha.b_coeff(p, m) == 0
            for mm in range(6):
                if mm != m:
                    assert ha.b_coeff(p, mm) != 0


def test_a_sequence_admissible_fixture():
    seq = ha.a_sequence(sp3(8), 6)
    assert seq.values[:5] == (1, 8, Fraction(40, 3), 0, 0)
    assert seq.first_zero == 3 and seq.first_negative is None


def test_a_sequence_inadmissible_fixture():
    # lambda = 5, n = 3: b_2 = -3/35 turns the sequence negative at index 3
    seq = ha.a_sequence(sp3(5), 6)
    assert seq.values[:4] == (1, 5, Fraction(10, 3), -2)
    assert seq.first_negative == 3


def test_a_sequence_lambda_zero():
    seq = ha.a_sequence(sp3(0), 5)
    assert seq.values[0] == 1
    assert all(v == 0 for v in seq.values[1:])


def test_a1_equals_lambda():
    for lam in (3, 8, 15, 7, 11):
        assert ha.a_sequence(sp3(lam), 2).values[1] == lam


def test_second_norm_constant_discrepancy_recorded():
    # The recursion gives A_2 = b_1 lambda (n-1)(n+2)/2; an alternative
    # printed constant n(n+4)/3 matches the m = 2 factor instead.  Both are
    # recorded here; the recursion is what the library implements.
    n, lam = 3, 8
    p = ha.SpectralParams(n, Fraction(1), Fraction(lam))
    b1 = ha.b_coeff(p, 1)
    recursion_A2 = b1 * lam * Fraction((n - 1) * (n + 2), 2)
    printed_A2 = b1 * lam * Fraction(n * (n + 4), 3)
    assert ha.a_sequence(p, 2).values[2] == recursion_A2 == Fraction(40, 3)
    assert printed_A2 == Fraction(56, 3) != recursion_A2
    # the m = 2 recursion factor is exactly the printed constant
    assert Fraction((2 + n - 2) * (n + 4), 3) == Fraction(n * (n + 4), 3)


def test_admissible_lambda_examples():
    assert ha.admissible_lambda(sp3(8)) == 2
    assert ha.admissible_lambda(sp3(3)) == 1
    assert ha.admissible_lambda(sp3(7)) is None
    assert ha.admissible_lambda(sp3(0)) == 0
    p = ha.SpectralParams(4, Fraction(1, 2), Fraction(5))
    assert ha.admissible_lambda(p) == 2  # 2*(4+1)/2 = 5


def test_spectral_dichotomy_sweep():
    for n in (3, 4, 5):
        for lam in range(0, 41):
            p = ha.SpectralParams(n, Fraction(1), Fraction(lam))
            m = ha.admissible_lambda(p)
            seq = ha.a_sequence(p, 15)
            if m is not None:
                assert seq.first_negative is None
                assert all(v == 0 for v in seq.values[m + 1:])
                assert all(v > 0 for v in seq.values[:m + 1])
            else:
                assert seq.first_negative is not None


# ----------------------------------------------------------------------
# dimensions
# ----------------------------------------------------------------------

def brute_dim(n_amb, m):
    """Kernel rank of the Laplacian on degree-m monomials, via sympy."""
    xs = sp.symbols(f"x0:{n_amb}")
    monos = ha.monomial_exponents(n_amb, m)
    target = ha.monomial_exponents(n_amb, max(m - 2, 0))
    rows = []
    for e in monos:
        mono = sp.prod(v ** k for v, k in zip(xs, e))
        lap = sum(sp.diff(mono, v, 2) for v in xs)
        lap = sp.Poly(lap, *xs) if lap != 0 else None
        row = [0] * len(target)
        if lap is not None:
            for ee, c in zip(lap.monoms(), lap.coeffs()):
                row[target.index(tuple(ee))] = int(c)
        rows.append(row)
    mat = sp.Matrix(rows)
    return len(monos) - mat.rank() if m >= 2 else len(monos)


@pytest.mark.parametrize("n_amb,m", [(3, 2), (3, 4), (4, 1), (4, 2), (4, 3),
                                     (5, 0), (5, 2)])
def test_dim_harmonics_vs_sympy_rank(n_amb, m):
    assert ha.dim_harmonics(n_amb, m) == brute_dim(n_amb, m)


def test_dim_harmonics_examples():
    assert ha.dim_harmonics(4, 1) == 4
    assert ha.dim_harmonics(4, 2) == 9
    assert ha.dim_harmonics(5, 0) == 1


def test_dim_matches_ambient_shell_sum():
    # dim H_m(R^(n+1)) = sum_{k<=m} dim H_k(R^n): the closed-form count
    for n in (3, 4):
        for m in range(6):
            total = sum(ha.dim_harmonics(n, k) for k in range(m + 1))
            assert total == ha.dim_harmonics(n + 1, m)
