"""Tests for polynomial arithmetic, irreducibility, and text encoding."""

import itertools
import random

import pytest

from invstab import errors
from invstab.fields import finite_field
from invstab.polys import (
    KARATSUBA_CUTOFF,
    Poly,
    artin_schreier,
    find_irreducible,
    frobenius_power,
    gcd,
    is_irreducible,
    poly_from_text,
    poly_to_text,
    powmod,
    reciprocal,
)
from invstab.polys import _mul_vals


F2 = finite_field(2)
F3 = finite_field(3)
F5 = finite_field(5)
F9 = finite_field(3, 2, modulus=(2, 2, 1))


def rand_poly(rng, ctx, max_deg, monic=False):
    deg = rng.randrange(max_deg + 1)
    coeffs = [ctx.element(rng.randrange(ctx.order)) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = ctx.one
    elif not any(c.val for c in coeffs):
        coeffs[-1] = ctx.one
    return Poly(ctx, coeffs)


def divides(d, f):
    return (f % d).is_zero


def irreducible_by_trial_division(f):
    """Oracle: monic f of degree >= 1 has no monic divisor of degree 1..deg-1."""
    ctx = f.ctx
    d = f.degree
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(ctx.order), repeat=k):
            g = Poly(ctx, [ctx.element(v) for v in tail] + [ctx.one])
            if divides(g, f):
                return False
    return True


# -- ring operations ----------------------------------------------------------


def test_product_example():
    X = Poly.x(F3)
    assert (X + 1) * (X + 2) == X ** 2 + 2


def test_divmod_examples():
    X = Poly.x(F5)
    q, r = divmod(X ** 3, X)
    assert q == X ** 2 and r.is_zero
    f = X ** 4 + 2 * X + 1
    g = 3 * X ** 2 + 1
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree is None or r.degree < g.degree


def test_divmod_round_trip():
    rng = random.Random(314)
    for ctx in (F5, F9):
        for _ in range(300):
            a = rand_poly(rng, ctx, 8)
            b = rand_poly(rng, ctx, 4)
            if b.is_zero:
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree


def test_division_by_zero_poly():
    X = Poly.x(F3)
    with pytest.raises(errors.DivisionByZero):
        divmod(X, Poly.zero(F3))
    with pytest.raises(errors.DivisionByZero):
        X % Poly.zero(F3)


def test_ring_axioms():
    rng = random.Random(2718)
    for ctx in (F5, F9):
        for _ in range(500):
            f = rand_poly(rng, ctx, 5)
            g = rand_poly(rng, ctx, 5)
            h = rand_poly(rng, ctx, 5)
            assert f + g == g + f
            assert f * g == g * f
            assert (f + g) * h == f * h + g * h
            assert (f * g) * h == f * (g * h)
            assert f - f == Poly.zero(ctx)
            assert f * Poly.one(ctx) == f


def test_degree_and_leading():
    X = Poly.x(F3)
    f = 2 * X ** 2 + X
    assert f.degree == 2
    assert f.leading.val == 2
    assert f.monic() == X ** 2 + 2 * X
    assert Poly.zero(F3).degree is None
    assert Poly.zero(F3).is_zero
    assert f[0].val == 0 and f[1].val == 1 and f[5].val == 0


def test_evaluation_horner():
    w = F9.modulus_root
    f = Poly(F9, [2, 0, 1])                      # X^2 + 2
    assert f(w) == w * w + 2
    rng = random.Random(17)
    for _ in range(50):
        g = rand_poly(rng, F9, 6)
        x = F9.element(rng.randrange(9))
        expected = F9.zero
        for i, c in enumerate(g.coeffs):
            expected = expected + c * x ** i
        assert g(x) == expected


def test_derivative():
    w = F9.modulus_root
    f = artin_schreier(w)
    assert f.derivative() == Poly(F9, [2])       # d/dX (X^3 + 2X + w) = 2
    rng = random.Random(18)
    for _ in range(100):
        f = rand_poly(rng, F3, 6)
        g = rand_poly(rng, F3, 6)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_karatsuba_matches_schoolbook():
    rng = random.Random(808)
    n = KARATSUBA_CUTOFF + 40
    a = tuple(rng.randrange(3) for _ in range(n))
    b = tuple(rng.randrange(3) for _ in range(n - 7))
    got = _mul_vals(F3, a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % 3
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    assert list(got) == out


# -- gcd and powmod -------------------------------------------------------------


def test_gcd_examples():
    X = Poly.x(F5)
    assert gcd(X ** 2 - 1, X - 1) == X + 4       # monic normalization
    f = 3 * X ** 2 + 1
    assert gcd(f, Poly.zero(F5)) == f.monic()
    assert gcd(Poly.zero(F5), f) == f.monic()
    with pytest.raises(errors.BothZero):
        gcd(Poly.zero(F5), Poly.zero(F5))


def test_gcd_with_derivative_of_squarefree():
    w = F9.modulus_root
    g = artin_schreier(w)
    assert gcd(g, g.derivative()) == Poly.one(F9)


def test_gcd_divides_both():
    rng = random.Random(606)
    for _ in range(200):
        f = rand_poly(rng, F5, 6)
        g = rand_poly(rng, F5, 6)
        if f.is_zero and g.is_zero:
            continue
        d = gcd(f, g)
        assert divides(d, f) or f.is_zero
        assert divides(d, g) or g.is_zero
        assert d.leading == F5.one


def test_powmod_examples():
    X = Poly.x(F3)
    m = Poly(F3, [2, 2, 1])
    assert powmod(X, 9, m) == X                  # X^q = X in F_q
    assert powmod(X, 3, m) == 2 * X + 1
    assert powmod(X, 0, m) == Poly.one(F3)
    with pytest.raises(errors.ZeroModulus):
        powmod(X, 5, Poly.zero(F3))


def test_powmod_matches_naive():
    rng = random.Random(909)
    m = Poly(F5, [1, 1, 1])
    for _ in range(50):
        f = rand_poly(rng, F5, 3)
        k = rng.randrange(60)
        assert powmod(f, k, m) == (f ** k) % m


# -- irreducibility ---------------------------------------------------------------


def test_irreducibility_examples():
    X = Poly.x(F3)
    assert is_irreducible(Poly(F3, [2, 2, 1]))
    assert not is_irreducible(X ** 2 - 1)
    assert is_irreducible(X + 2)
    w = F9.modulus_root
    assert is_irreducible(artin_schreier(w))     # Tr(w) = 1, so X^3 - X + w stays whole
    with pytest.raises(errors.ConstantPolynomial):
        is_irreducible(Poly.one(F3))
    with pytest.raises(errors.ConstantPolynomial):
        is_irreducible(Poly.zero(F3))


def test_rabin_against_trial_division():
    """Exhaustive cross-check of the Rabin test on small degrees."""
    for ctx, max_deg in ((F2, 4), (F3, 3)):
        for deg in range(1, max_deg + 1):
            for tail in itertools.product(range(ctx.order), repeat=deg):
                f = Poly(ctx, [ctx.element(v) for v in tail] + [ctx.one])
                assert is_irreducible(f) == irreducible_by_trial_division(f), f


def test_rabin_over_extension_field():
    rng = random.Random(110)
    for _ in range(60):
        f = rand_poly(rng, F9, 3, monic=True)
        if f.degree < 1:
            continue
        assert is_irreducible(f) == irreducible_by_trial_division(f), f


def test_find_irreducible_goldens():
    def vals(f):
        return tuple(c.val for c in f.coeffs)

    assert vals(find_irreducible(F2, 1)) == (0, 1)
    assert vals(find_irreducible(F2, 2)) == (1, 1, 1)
    assert vals(find_irreducible(F2, 3)) == (1, 0, 1, 1)
    assert vals(find_irreducible(F2, 4)) == (1, 0, 0, 1, 1)
    assert vals(find_irreducible(F3, 2)) == (1, 0, 1)
    assert vals(find_irreducible(F3, 3)) == (1, 0, 2, 1)
    assert vals(find_irreducible(F5, 2)) == (1, 1, 1)


def test_find_irreducible_is_first_in_order():
    """The chosen modulus must be minimal in the documented candidate order."""
    for ctx, deg in ((F2, 3), (F2, 4), (F3, 2), (F3, 3), (F5, 2)):
        first = None
        for tail in itertools.product(range(ctx.order), repeat=deg):
            f = Poly(ctx, [ctx.element(v) for v in tail] + [ctx.one])
            if irreducible_by_trial_division(f):
                first = f
                break
        assert find_irreducible(ctx, deg) == first


def test_find_irreducible_over_extension():
    g = find_irreducible(F9, 2)
    assert g.degree == 2 and g.leading == F9.one
    assert is_irreducible(g)


# -- reciprocal ----------------------------------------------------------------------


def test_reciprocal_examples():
    m = Poly(F3, [2, 2, 1])
    assert reciprocal(m) == Poly(F3, [1, 2, 2])
    w = F9.modulus_root
    g = artin_schreier(w)
    # X^p g(1/X) = xi X^p - X^(p-1) + 1
    assert reciprocal(g) == Poly(F9, [1, 0, 2, w])
    with pytest.raises(errors.ConstantPolynomial):
        reciprocal(Poly.constant(F3.from_int(2)))


def test_reciprocal_involution_and_irreducibility():
    rng = random.Random(1234)
    for ctx in (F3, F9):
        seen = 0
        while seen < 100:
            f = rand_poly(rng, ctx, 5)
            if f.degree is None or f.degree < 1 or not f[0]:
                continue
            seen += 1
            assert reciprocal(reciprocal(f)) == f
            assert is_irreducible(f.monic()) == is_irreducible(reciprocal(f).monic())


# -- frobenius powers and the additive family -----------------------------------------


def test_frobenius_power_is_pth_power():
    rng = random.Random(321)
    for ctx in (F3, F9, finite_field(2, 2)):
        for _ in range(40):
            f = rand_poly(rng, ctx, 4)
            assert frobenius_power(f) == f ** ctx.p


def test_artin_schreier_shape():
    w = F9.modulus_root
    g = artin_schreier(w)
    assert g.degree == 3
    assert tuple(c for c in g.coeffs) == (w, F9.from_int(-1), F9.zero, F9.one)
    F4 = finite_field(2, 2)
    u = F4.modulus_root
    h = artin_schreier(u)
    assert h == Poly(F4, [u, 1, 1])              # X^2 + X + u in characteristic 2


# -- text encoding ----------------------------------------------------------------------


def test_poly_text_round_trip():
    w = F9.modulus_root
    f = Poly(F9, [F9.zero, w, F9.one])
    assert poly_to_text(f) == "0,0;0,1;1,0"
    assert poly_from_text(F9, poly_to_text(f)) == f
    rng = random.Random(42)
    for ctx in (F3, F9):
        for _ in range(100):
            f = rand_poly(rng, ctx, 6)
            assert poly_from_text(ctx, poly_to_text(f)) == f


def test_poly_text_prime_field():
    f = Poly(F5, [1, 0, 3])
    assert poly_to_text(f) == "1;0;3"
    assert poly_from_text(F5, "1;0;3") == f
