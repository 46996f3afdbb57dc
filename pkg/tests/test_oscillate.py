"""Boundary-sum estimator against a quadrature oracle, series remainders,
and the L^1 budget arithmetic."""

import random

import mpmath
from gmpy2 import mpq

from nlsverify.exact import GaussianRational
from nlsverify.oscillate import (
    PI_TILDE,
    boundary_sum,
    compose_cheb_series,
    cos_remainder_bound,
    derivative_sum,
    l1_defect_budget,
    pi_tilde_gap,
    sin_remainder_bound,
    taylor_cos_poly,
    taylor_sin_poly,
)
from nlsverify.poly import ChebPoly1, MonoPoly1, cheb_mul, compose, mono_to_cheb
from nlsverify.tnorm import tnorm1
from nlsverify.exact import cos_enclose

rng = random.Random(2718)


def test_trivial_boundary_sums():
    # p = 0 gives the zero rectangle
    bs = boundary_sum(MonoPoly1([]), 0, 1)
    assert bs.value.re.contains(0) and bs.value.im.contains(0)
    assert bs.value.re.lo == bs.value.re.hi == 0
    # p = 1, g = identity on [0, b]: the estimator is exact for f = e^{ig} g'
    b = mpq(3, 2)
    bs = boundary_sum(MonoPoly1([1]), 0, b)
    mpmath.mp.dps = 40
    ref = mpmath.quad(lambda x: mpmath.e ** (1j * x), [0, float(b)])
    assert abs(float(bs.value.re.mid) - float(ref.real)) < 1e-25
    assert abs(float(bs.value.im.mid) - float(ref.imag)) < 1e-25


def test_derivative_sum_small_case():
    # p = x^2: S_p(x) = i^1 x^2 + i^2 2x + i^3 2 = -2x + i(x^2 - 2)
    p = MonoPoly1([0, 0, 1])
    s = derivative_sum(p, mpq(3))
    assert s == GaussianRational(-6, 7)


def test_boundary_sum_against_quadrature_oracle():
    """50 random polynomials, affine phases: the enclosure of the boundary
    sum contains the oscillatory integral of f = (p o g) g' up to the
    oracle's own accuracy (the L^1 defect is exactly zero for such f)."""
    mpmath.mp.dps = 40

    def to_mpf(q):
        return mpmath.mpf(int(q.numerator)) / mpmath.mpf(int(q.denominator))

    for _ in range(50):
        deg = rng.randint(0, 6)
        p = MonoPoly1([mpq(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(deg + 1)])
        alpha = mpq(rng.randint(1, 12), rng.randint(1, 5))
        beta = mpq(rng.randint(-10, 10), rng.randint(1, 9))
        a, b = mpq(0), mpq(rng.randint(1, 15), 10)
        g_a, g_b = alpha * a + beta, alpha * b + beta
        bs = boundary_sum(p, g_a, g_b)
        pf = [to_mpf(mpq(c)) for c in p.coeffs]
        alf, bef = to_mpf(alpha), to_mpf(beta)

        def f(x):
            g = alf * x + bef
            val = pf[-1]
            for c in reversed(pf[:-1]):
                val = val * g + c
            return mpmath.e ** (1j * g) * val * alf

        ref = mpmath.quad(f, mpmath.linspace(0, to_mpf(b), 8))
        scale = 1 + abs(ref)
        pad = mpmath.mpf("1e-15") * scale  # quadrature oracle accuracy
        assert to_mpf(bs.value.re.lo) - pad <= ref.real <= to_mpf(bs.value.re.hi) + pad
        assert to_mpf(bs.value.im.lo) - pad <= ref.imag <= to_mpf(bs.value.im.hi) + pad


def test_l1_budget_grows_by_perturbation_tnorm():
    interval = (mpq(0), mpq(2, 3))
    delta = MonoPoly1([mpq(1, 7), 0, mpq(-2, 5)])
    base = mpq(3, 100)
    budget0 = l1_defect_budget(base, interval)
    budget1 = l1_defect_budget(base + tnorm1(delta, interval), interval)
    assert budget1 - budget0 == (interval[1] - interval[0]) * tnorm1(delta, interval)


def test_pi_tilde_gap_small():
    assert pi_tilde_gap() <= mpq(1, 10**15)


def test_taylor_remainders_at_points():
    """|cos x - composite(x)| <= stated remainder at 100 random rationals."""
    C = taylor_cos_poly(MonoPoly1([0, 1]))  # argument = x itself
    S = taylor_sin_poly(MonoPoly1([0, 1]))
    two_pi = 2 * PI_TILDE
    for _ in range(100):
        x = mpq(rng.randint(-12000, 0), 1000)
        u = abs(x + two_pi)
        rem_c = cos_remainder_bound(max(u, mpq(1)))
        enc = cos_enclose(x, mpq(1, 10**25))
        val = C(x)
        assert abs(val - enc.mid) <= rem_c + enc.width
        from nlsverify.exact import sin_enclose
        rem_s = sin_remainder_bound(max(u, mpq(1)))
        encs = sin_enclose(x, mpq(1, 10**25))
        assert abs(S(x) - encs.mid) <= rem_s + encs.width


def test_taylor_composite_degree_and_agreement():
    arg = mono_to_cheb(MonoPoly1([mpq(-3), mpq(1, 2), mpq(1, 3)]), (0, 1))
    C_cheb = taylor_cos_poly(arg, terms=5)
    C_mono = taylor_cos_poly(arg.to_mono(), terms=5)
    assert C_cheb.degree == C_mono.degree == 2 * 2 * 4
    for _ in range(5):
        x = mpq(rng.randint(0, 100), 100)
        assert C_cheb(x) == C_mono(x)


def test_compose_cheb_series_matches_clenshaw():
    p = mono_to_cheb(MonoPoly1([mpq(1, 3), -2, 0, 1]), (-2, 2))
    arg_m = MonoPoly1([mpq(1, 2), mpq(3, 4)])
    arg_c = mono_to_cheb(arg_m, (0, 1))
    via_series = compose_cheb_series(p, arg_c)
    via_clenshaw = compose(p, arg_m)
    assert via_series.to_mono() == via_clenshaw
