"""T-norm: exactness, domination of the sup-norm, norm axioms."""

import random

import pytest
from gmpy2 import mpq

from nlsverify.exact import GaussianRational
from nlsverify.poly import ChebPoly1, MonoPoly1, MonoPoly2, mono_to_cheb
from nlsverify.tnorm import tnorm1, tnorm2

rng = random.Random(99)


def rand_poly(deg, bound=40):
    return MonoPoly1([mpq(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg + 1)])


def test_trivial_values():
    assert tnorm1(MonoPoly1([mpq(-5, 3)]), (-1, 1)) == mpq(5, 3)
    # x^2 - 1 = -T_0/2 + T_2/2 on [-1,1]
    assert tnorm1(MonoPoly1([-1, 0, 1]), (-1, 1)) == 1
    # x = T_0/2 + T_1/2 after pullback to [0,1]
    assert tnorm1(MonoPoly1([0, 1]), (0, 1)) == 1


def test_chebyshev_basis_norm_one():
    for n in range(0, 101, 7):
        p = ChebPoly1([0] * n + [1], (mpq(-3, 2), mpq(7, 3)))
        assert tnorm1(p) == 1
        assert tnorm1(p.to_mono(), (mpq(-3, 2), mpq(7, 3))) == 1


def test_domination_of_pointwise_values():
    dom = (mpq(-1, 2), mpq(8, 5))
    for _ in range(200):
        p = rand_poly(rng.randint(0, 25))
        n = tnorm1(p, dom)
        for _ in range(10):
            x = dom[0] + (dom[1] - dom[0]) * mpq(rng.randint(0, 1000), 1000)
            assert abs(p(x)) <= n


def test_norm_axioms():
    dom = (0, 1)
    for _ in range(50):
        p, q = rand_poly(9), rand_poly(11)
        assert tnorm1(p + q, dom) <= tnorm1(p, dom) + tnorm1(q, dom)
        c = mpq(rng.randint(-20, 20), rng.randint(1, 20))
        assert tnorm1(c * p, dom) == abs(c) * tnorm1(p, dom)
    assert tnorm1(MonoPoly1([]), dom) == 0


def test_complex_rejected():
    with pytest.raises(TypeError):
        tnorm1(MonoPoly1([GaussianRational(0, 1)]), (-1, 1))


def test_tnorm2_trivial():
    box = ((mpq(-1), mpq(1)), (mpq(-1), mpq(1)))
    assert tnorm2(MonoPoly2.const(1), box) == 1
    # y*a is T_1(y) T_1(a) on the standard box
    assert tnorm2(MonoPoly2.y() * MonoPoly2.a(), box) == 1


def test_tnorm2_degenerate_axis_matches_tnorm1():
    box = ((mpq(0), mpq(1)), (mpq(-2), mpq(3)))
    for _ in range(20):
        p = rand_poly(rng.randint(0, 12))
        p2 = MonoPoly2.from_univar1(p)
        assert tnorm2(p2, box) == tnorm1(p, (0, 1))


def test_tnorm2_domination():
    box = ((mpq(0), mpq(1)), (mpq(-1), mpq(2)))
    for _ in range(40):
        p = MonoPoly2([[mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
                       for _ in range(5)])
        n = tnorm2(p, box)
        for _ in range(5):
            y = mpq(rng.randint(0, 100), 100)
            a = mpq(rng.randint(-100, 200), 100)
            assert abs(p(y, a)) <= n
