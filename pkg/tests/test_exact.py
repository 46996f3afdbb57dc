"""Field axioms, fraction parsing, and certified enclosures."""

import random

import mpmath
import pytest
from gmpy2 import mpq

from nlsverify.exact import (
    ComplexEnclosure,
    Enclosure,
    GaussianRational,
    cos_enclose,
    exp_i_enclose,
    format_fraction,
    parse_fraction,
    pi_enclosure,
    sin_enclose,
)

rng = random.Random(20240811)


def rand_q(bound=10**6):
    return mpq(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_gauss():
    return GaussianRational(rand_q(), rand_q())


# ---------------------------------------------------------------------------
# fraction text format
# ---------------------------------------------------------------------------

def test_parse_format_roundtrip():
    for _ in range(200):
        q = rand_q()
        assert parse_fraction(format_fraction(q)) == q
    assert format_fraction(mpq(5)) == "5"
    assert parse_fraction("-3/7") == mpq(-3, 7)
    assert parse_fraction("+12") == 12


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a/b", "1/-2", "--3", "2/3/4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_fraction(bad)


# ---------------------------------------------------------------------------
# Gaussian rationals: field axioms on random triples
# ---------------------------------------------------------------------------

def test_field_axioms():
    for _ in range(300):
        a, b, c = rand_gauss(), rand_gauss(), rand_gauss()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert (a / a) == GaussianRational(1)
            assert a * (GaussianRational(1) / a) == GaussianRational(1)
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.abs2() == (a * a.conjugate()).re


def test_abs2_is_rational():
    z = GaussianRational(mpq(3, 5), mpq(-4, 5))
    assert z.abs2() == 1


# ---------------------------------------------------------------------------
# pi enclosure
# ---------------------------------------------------------------------------

def test_pi_enclosure_contains_paper_scale_value():
    enc = pi_enclosure(mpq(1, 10**16))
    pi_tilde = mpq(31415926535897932, 10**16)
    assert enc.width <= mpq(1, 10**16)
    # the 17-digit value lies within 1e-15 of the midpoint
    assert abs(enc.mid - pi_tilde) <= mpq(1, 10**15)


def test_pi_enclosure_width_one():
    enc = pi_enclosure(1)
    assert enc.width <= 1
    assert enc.lo <= mpq(32, 10) and enc.hi >= mpq(31, 10)


def test_pi_enclosure_thirty_digits():
    enc = pi_enclosure(mpq(1, 10**30))
    mpmath.mp.dps = 50
    oracle = mpq(int(mpmath.pi * 10**40), 10**40)  # 40-digit rational oracle
    assert enc.lo <= oracle <= enc.hi


# ---------------------------------------------------------------------------
# cos/sin enclosures
# ---------------------------------------------------------------------------

def test_cos_sin_trivial():
    assert cos_enclose(0, mpq(1, 10)).contains(1)
    c = cos_enclose(0, mpq(1, 10**30))
    assert c.lo == c.hi == 1
    s = sin_enclose(0, mpq(1, 10**30))
    assert s.lo == s.hi == 0


def test_cos_one_against_oracle():
    enc = cos_enclose(1, mpq(1, 10**20))
    mpmath.mp.dps = 40
    oracle = mpq(int(mpmath.cos(1) * 10**35), 10**35)
    assert enc.lo <= oracle <= enc.hi
    assert enc.width <= mpq(3, 10**20)


def test_exp_i_trivial_and_pi():
    r = exp_i_enclose(0, mpq(1, 10**30))
    assert r.re.lo == r.re.hi == 1 and r.im.lo == r.im.hi == 0
    pi_tilde = mpq(31415926535897932, 10**16)
    r = exp_i_enclose(pi_tilde, mpq(1, 10**20))
    assert abs(r.re.mid + 1) <= mpq(1, 10**15)
    assert r.im.contains(r.im.mid)


def test_pythagorean_identity_on_random_arguments():
    for _ in range(1000):
        x = mpq(rng.randint(-15 * 997, 15 * 997), 997)
        c, s = cos_enclose(x, mpq(1, 10**12)), sin_enclose(x, mpq(1, 10**12))
        total = c * c + s * s
        assert total.contains(1)


def test_symmetry_endpoint_exact():
    for _ in range(50):
        x = mpq(rng.randint(1, 2000), rng.randint(1, 130))
        cp, cm = cos_enclose(x, mpq(1, 10**15)), cos_enclose(-x, mpq(1, 10**15))
        assert cp.lo == cm.lo and cp.hi == cm.hi
        sp, sm = sin_enclose(x, mpq(1, 10**15)), sin_enclose(-x, mpq(1, 10**15))
        assert sp.lo == -sm.hi and sp.hi == -sm.lo


def test_monotone_refinement():
    x = mpq(157, 10)
    prev = cos_enclose(x, mpq(1, 10**6))
    for e in (10**8, 10**12, 10**16):
        cur = cos_enclose(x, mpq(1, e))
        assert cur.intersects(prev)
        prev = cur


# ---------------------------------------------------------------------------
# enclosure arithmetic
# ---------------------------------------------------------------------------

def test_enclosure_arithmetic_outward():
    a = Enclosure(mpq(1, 3), mpq(1, 2))
    b = Enclosure(mpq(-2), mpq(3))
    prod = a * b
    for x in (mpq(1, 3), mpq(1, 2)):
        for y in (mpq(-2), mpq(0), mpq(3)):
            assert prod.contains(x * y)
    assert (a - a).contains(0)
    assert (-a).lo == -a.hi


def test_complex_enclosure_mul():
    z = ComplexEnclosure(Enclosure(1, 2), Enclosure(-1, 1))
    w = GaussianRational(mpq(1, 2), mpq(1, 3))
    r = z * w
    assert r.contains(GaussianRational(1, -1) * w)
    assert r.contains(GaussianRational(2, 1) * w)
