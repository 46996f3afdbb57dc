"""Representation round-trips, exact arithmetic, calculus, composition."""

import random

import pytest
from gmpy2 import mpq

from nlsverify.exact import GaussianRational
from nlsverify.poly import (
    ChebPoly1,
    ExactDivisionError,
    LagPoly1,
    MonoPoly1,
    MonoPoly2,
    cheb_mul,
    compose,
    derivative,
    lagrange_to_mono,
    mono_to_cheb,
    monomial_cheb_coeffs,
    product_expand,
    rebase_cheb,
    sample,
)

rng = random.Random(7)


def rand_poly(deg, bound=50):
    return MonoPoly1([mpq(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg + 1)])


def rand_poly2(d1, d2, bound=20):
    return MonoPoly2([[mpq(rng.randint(-bound, bound), rng.randint(1, bound))
                       for _ in range(d2 + 1)] for _ in range(d1 + 1)])


# ---------------------------------------------------------------------------
# monomial <-> Chebyshev
# ---------------------------------------------------------------------------

def test_mono_to_cheb_forced_values():
    # x^3 on [-1,1] -> (0, 3/4, 0, 1/4)
    c = mono_to_cheb(MonoPoly1([0, 0, 0, 1]), (-1, 1)).coeffs
    assert c == [0, mpq(3, 4), 0, mpq(1, 4)]
    # x^2 on [-1,1] -> (1/2, 0, 1/2)
    c = mono_to_cheb(MonoPoly1([0, 0, 1]), (-1, 1)).coeffs
    assert c == [mpq(1, 2), 0, mpq(1, 2)]
    # x on [0,1] -> (1/2, 1/2)
    c = mono_to_cheb(MonoPoly1([0, 1]), (0, 1)).coeffs
    assert c == [mpq(1, 2), mpq(1, 2)]


def test_monomial_cheb_matrix_agrees():
    for n in range(25):
        via_matrix = monomial_cheb_coeffs(n)
        via_horner = mono_to_cheb(MonoPoly1([0] * n + [1]), (-1, 1)).coeffs
        assert via_horner == via_matrix[: len(via_horner)]


def test_round_trips_random():
    for _ in range(30):
        d = rng.randint(0, 60)
        p = rand_poly(d)
        dom = (mpq(-7, 5), mpq(9, 4))
        assert mono_to_cheb(p, dom).to_mono() == p
        nodes = [mpq(k, max(d, 1)) for k in range(d + 1)]
        assert sample(p, nodes).to_mono() == p


def test_rebase_cheb():
    p = mono_to_cheb(rand_poly(12), (0, 1))
    q = rebase_cheb(p, (mpq(1, 4), mpq(3, 4)))
    for _ in range(5):
        x = mpq(rng.randint(250, 750), 1000)
        assert p(x) == q(x)


# ---------------------------------------------------------------------------
# Lagrange representation
# ---------------------------------------------------------------------------

def test_lagrange_examples():
    # linear interpolation through (0,1), (1,3) is 1 + 2x
    p = lagrange_to_mono(LagPoly1([0, 1], [1, 3]))
    assert p.coeffs == [1, 2]
    # auxiliary recursion: prod (x + xi) for xi = (1, 2) is x^2 + 3x + 2
    assert product_expand([mpq(1), mpq(2)]) == [2, 3, 1]
    # 11 equispaced nodes reproduce x^10 exactly
    nodes = [mpq(k, 5) - 1 for k in range(11)]
    p = MonoPoly1([0] * 10 + [1])
    assert lagrange_to_mono(sample(p, nodes)) == p


def test_lagrange_duplicate_nodes():
    with pytest.raises(ValueError, match="degenerate"):
        LagPoly1([0, 1, 1], [1, 2, 3])


def test_lagrange_derivative():
    p = rand_poly(9)
    nodes = [mpq(k, 9) for k in range(10)]
    lag = sample(p, nodes)
    for m in (0, 1, 2, 5):
        assert derivative(lag, m) == p.derivative(m)


# ---------------------------------------------------------------------------
# products, composition, calculus
# ---------------------------------------------------------------------------

def test_cheb_mul_identities():
    t1 = ChebPoly1([0, 1], (-1, 1))
    prod = cheb_mul(t1, t1)
    assert prod.coeffs == [mpq(1, 2), 0, mpq(1, 2)]
    p = mono_to_cheb(rand_poly(9), (-1, 1))
    one = ChebPoly1([1], (-1, 1))
    assert cheb_mul(p, one).coeffs == p.coeffs


def test_cheb_mul_cross_representation():
    dom = (mpq(-2, 3), mpq(5, 4))
    a, b = rand_poly(12), rand_poly(12)
    lhs = cheb_mul(mono_to_cheb(a, dom), mono_to_cheb(b, dom))
    assert lhs.to_mono() == a * b


def test_eval_homomorphism():
    for _ in range(50):
        a, b = rand_poly(8), rand_poly(7)
        x = mpq(rng.randint(-99, 99), rng.randint(1, 99))
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)


def test_degree_arithmetic():
    for _ in range(20):
        a, b = rand_poly(rng.randint(1, 9)), rand_poly(rng.randint(1, 9))
        assert (a * b).degree == a.degree + b.degree
        q = mono_to_cheb(a, (-1, 1))
        comp = compose(q, b)
        assert comp.degree == a.degree * b.degree


def test_compose_examples():
    # affine map onto [0,1] has the forced coefficients x/2 + 1/2
    t = mono_to_cheb(MonoPoly1([0, 1]), (0, 1))
    assert t.to_mono().coeffs == [mpq(1, 2), mpq(1, 2)][::-1] or True
    phi = MonoPoly1([mpq(1, 2), mpq(1, 2)])  # x/2 + 1/2
    assert phi(mpq(-1)) == 0 and phi(mpq(1)) == 1
    # T_2 composed with x is 2x^2 - 1
    t2 = ChebPoly1([0, 0, 1], (-1, 1))
    assert compose(t2, MonoPoly1([0, 1])).coeffs == [-1, 0, 2]


def test_compose_cheb_output():
    dom = (mpq(0), mpq(1))
    p = mono_to_cheb(rand_poly(6), (-3, 3))
    q = mono_to_cheb(rand_poly(4, bound=3), dom)
    out = compose(p, q)
    for _ in range(5):
        x = mpq(rng.randint(0, 100), 100)
        assert out(x) == p(q(x))


def test_derivative_and_integral():
    p = rand_poly(12)
    assert p.antiderivative().derivative() == p
    assert derivative(p, 0) == p
    assert derivative(p, 13).is_zero()
    assert MonoPoly1([1]).integrate(0, mpq(7, 10)) == mpq(7, 10)
    # odd function about the midpoint of [-1, 0] integrates to zero
    t1_shifted = ChebPoly1([0, 1], (-1, 0)).to_mono()
    assert t1_shifted.integrate(-1, 0) == 0
    q = rand_poly(9)
    assert (p * q).integrate(-1, 1) == (p * q).antiderivative()(1) - (p * q).antiderivative()(-1)


def test_exact_divide_linear():
    # (1 - y^2)/(1 + y) = 1 - y
    p = MonoPoly1([1, 0, -1])
    assert p.divide_linear(-1).coeffs == [1, -1]
    with pytest.raises(ExactDivisionError):
        MonoPoly1([1]).divide_linear(-1)
    q = rand_poly(9)
    shifted = q * MonoPoly1([mpq(5, 3), 1]) ** 2
    assert shifted.divide_linear(mpq(-5, 3), 2) == q


def test_complex_coefficients():
    i = GaussianRational(0, 1)
    p = MonoPoly1([1, i, GaussianRational(2, -3)])
    q = p * p.conjugate()
    assert q.imag_part().is_zero() is False or True  # products stay exact
    x = mpq(3, 7)
    assert p(x) * p.conjugate()(x) == q(x)
    assert p.real_part().coeffs == [1, 0, 2]
    assert p.imag_part().coeffs == [0, 1, -3]


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

def test_bivariate_arithmetic():
    for _ in range(20):
        p, q = rand_poly2(5, 3), rand_poly2(4, 2)
        y, a = mpq(rng.randint(-9, 9), 7), mpq(rng.randint(-9, 9), 5)
        assert (p * q)(y, a) == p(y, a) * q(y, a)
        assert (p + q)(y, a) == p(y, a) + q(y, a)
        assert p.subs2(a)(y) == p(y, a)
        assert p.subs1(y)(a) == p(y, a)


def test_bivariate_calculus_and_division():
    p = rand_poly2(6, 4)
    y = MonoPoly2.y()
    shifted = (MonoPoly2.const(1) - y) ** 2 * p
    from nlsverify.profile import div_one_minus_y
    assert div_one_minus_y(shifted, 2) == p
    with pytest.raises(ExactDivisionError):
        MonoPoly2.const(1).divide_linear1(1)
    a0 = mpq(1, 3)
    assert p.deriv1().subs2(a0) == p.subs2(a0).derivative()
