"""Oscillatory integral machinery: boundary-sum estimator, certified phase
approximation error, and polynomial cos/sin composites.

The central device: for real g with |g'| > 0 on [a, b] and any polynomial p,

    | int_a^b e^{ig} f - e^{ig(a)} S_p(g(a)) + e^{ig(b)} S_p(g(b)) |
        <= || f - (p o g) g' ||_{L^1(a,b)},

where S_p(x) = sum_k i^{k+1} p^(k)(x).  The boundary sums are exact Gaussian
rational values times certified e^{ix} rectangles, so an oscillatory
integral is bracketed by exact data plus an L^1 defect that the caller
bounds through a T-norm.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import fac, mpq

from .exact import ComplexEnclosure, GaussianRational, exp_i_enclose, pi_enclosure
from .poly import ChebPoly1, MonoPoly1, cheb_mul

I = GaussianRational(0, 1)

#: default width for the transcendental factors; two orders below the
#: tightest margins consumed downstream, so enclosure slack never flips
#: a verdict
DEFAULT_TAIL = mpq(1, 10**20)

#: the rational stand-in for pi used by the cos/sin composites
PI_TILDE = mpq(31415926535897932, 10**16)


@dataclass(frozen=True)
class BoundarySum:
    """Certified rectangle for the endpoint expression of the estimator."""
    value: ComplexEnclosure
    g_a: mpq
    g_b: mpq


def derivative_sum(p: MonoPoly1, x) -> GaussianRational:
    """S_p(x) = sum_{k=0}^{deg p} i^{k+1} p^(k)(x), exact."""
    acc = GaussianRational(0)
    q = p
    k = 0
    while q.degree >= 0:
        v = q(mpq(x))
        if not isinstance(v, GaussianRational):
            v = GaussianRational(v)
        acc = acc + (I ** (k + 1)) * v
        q = q.derivative()
        k += 1
    return acc


def boundary_sum(p: MonoPoly1, g_a, g_b, tail=DEFAULT_TAIL) -> BoundarySum:
    """Enclosure of e^{ig(a)} S_p(g(a)) - e^{ig(b)} S_p(g(b)).

    The phase enters only through its (rational) endpoint values; the
    monotonicity hypothesis |g'| > 0 on [a, b] is the caller's certificate.
    """
    g_a, g_b = mpq(g_a), mpq(g_b)
    sa = derivative_sum(p, g_a)
    sb = derivative_sum(p, g_b)
    ea = exp_i_enclose(g_a, tail)
    eb = exp_i_enclose(g_b, tail)
    return BoundarySum(value=ea * sa - eb * sb, g_a=g_a, g_b=g_b)


def l1_defect_budget(defect_sup, interval) -> mpq:
    """L^1 budget from a certified sup bound: (b - a) * sup."""
    a, b = mpq(interval[0]), mpq(interval[1])
    return (b - a) * mpq(defect_sup)


# ---------------------------------------------------------------------------
# cos / sin composites around the rational 2*pi
# ---------------------------------------------------------------------------

_PI_GAP_CACHE: dict = {}


def pi_tilde_gap() -> mpq:
    """Certified bound for |pi - PI_TILDE| (about 1e-16)."""
    if "gap" not in _PI_GAP_CACHE:
        enc = pi_enclosure(mpq(1, 10**20))
        _PI_GAP_CACHE["gap"] = max(abs(PI_TILDE - enc.lo), abs(PI_TILDE - enc.hi))
    return _PI_GAP_CACHE["gap"]


def cos_remainder_bound(abs_u_max, terms: int = 19) -> mpq:
    """Bound for |cos(x) - C(x)| where C is the ``terms``-term shifted series
    at u = x + 2*PI_TILDE and |u| <= abs_u_max: the factorial tail of the
    series around the true 2*pi plus the 2|pi - PI_TILDE| offset slack."""
    n = 2 * terms
    return mpq(abs_u_max) ** n / fac(n) + 2 * pi_tilde_gap()


def sin_remainder_bound(abs_u_max, terms: int = 19) -> mpq:
    n = 2 * terms + 1
    return mpq(abs_u_max) ** n / fac(n) + 2 * pi_tilde_gap()


def taylor_cos_poly(argument, terms: int = 19):
    """Polynomial approximant of cos(argument(y)): the shifted Taylor series
    sum_{k<terms} (-1)^k [argument + 2 PI_TILDE]^{2k} / (2k)!.

    Returns the composite in the representation of ``argument`` (monomial or
    Chebyshev); the remainder over a certified argument range comes from
    :func:`cos_remainder_bound`.
    """
    return _taylor_trig_poly(argument, terms, even=True)


def taylor_sin_poly(argument, terms: int = 19):
    """Sine analogue (odd powers, remainder from sin_remainder_bound)."""
    return _taylor_trig_poly(argument, terms, even=False)


def _taylor_trig_poly(argument, terms: int, even: bool):
    two_pi = 2 * PI_TILDE
    if isinstance(argument, ChebPoly1):
        dom = argument.domain
        u = argument + ChebPoly1([two_pi], dom)
        u2 = cheb_mul(u, u)
        upow = ChebPoly1([1], dom) if even else u
        r = 0 if even else 1
        total = upow.scale(mpq(1, fac(r)))
        for k in range(1, terms):
            upow = cheb_mul(upow, u2)
            total = total + upow.scale(mpq((-1) ** k, fac(2 * k + r)))
        return total
    if isinstance(argument, MonoPoly1):
        u = argument + MonoPoly1([two_pi])
        u2 = u * u
        upow = MonoPoly1([1]) if even else u
        r = 0 if even else 1
        total = upow * mpq(1, fac(r))
        for k in range(1, terms):
            upow = upow * u2
            total = total + upow * mpq((-1) ** k, fac(2 * k + r))
        return total
    raise TypeError("argument must be MonoPoly1 or ChebPoly1")


def compose_cheb_series(p: ChebPoly1, arg: ChebPoly1) -> ChebPoly1:
    """p(arg(y)) for Chebyshev p on its own domain and Chebyshev arg, via
    the three-term recurrence T_{n+1}(v) = 2 v T_n(v) - T_{n-1}(v) with
    v the affinely normalized argument.  Exact; stays in arg's basis."""
    a, b = p.domain
    dom = arg.domain
    v = ChebPoly1(list(arg.coeffs), dom).scale(mpq(2, b - a)) + ChebPoly1([mpq(-(a + b), b - a)], dom)
    total = ChebPoly1([p.coeffs[0]] if p.coeffs else [], dom)
    if len(p.coeffs) <= 1:
        return total
    t_prev = ChebPoly1([1], dom)
    t_cur = v
    total = total + t_cur.scale(p.coeffs[1])
    for c in p.coeffs[2:]:
        t_prev, t_cur = t_cur, cheb_mul(v, t_cur).scale(2) - t_prev
        if c != 0:
            total = total + t_cur.scale(c)
    return total
