"""Exact scalar arithmetic: rationals, Gaussian rationals, and certified
rational enclosures of pi, cos and sin.

Every computation in this package reduces to fraction arithmetic.  Rationals
are GMP-backed ``gmpy2.mpq`` values (always in canonical form: positive
denominator, fully reduced), complex scalars are pairs of rationals, and the
only non-rational quantities we ever touch (pi, cos x, sin x) are represented
by intervals with exact rational endpoints that provably contain the true
value.  No floating point arithmetic is used anywhere in the proof path.
"""

from __future__ import annotations

from gmpy2 import mpq, mpz

QQ = mpq  # rational constructor (exact, canonical)

ZERO = mpq(0)
ONE = mpq(1)


# ---------------------------------------------------------------------------
# fraction text format
# ---------------------------------------------------------------------------

def parse_fraction(text: str) -> mpq:
    """Parse the fraction text format "±p/q" (the "/q" is optional).

    This is the on-disk format of all coefficient tables and of serialized
    polynomials.  Raises ValueError on anything else.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty fraction literal")
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        body = s[1:]
    else:
        body = s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"malformed fraction literal: {text!r}")
    if sep and mpz(den) == 0:
        raise ValueError(f"zero denominator in fraction literal: {text!r}")
    return sign * (mpq(mpz(num), mpz(den)) if sep else mpq(mpz(num)))


def format_fraction(x) -> str:
    """Inverse of :func:`parse_fraction`; omits the denominator when it is 1."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decimal_string(x, digits: int = 12) -> str:
    """Truncated decimal expansion of a rational, for human-readable reports."""
    x = mpq(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    ip = x.numerator // x.denominator
    rem = x - ip
    frac_digits = []
    for _ in range(digits):
        rem *= 10
        d = rem.numerator // rem.denominator
        frac_digits.append(str(d))
        rem -= d
    return f"{sign}{ip}." + "".join(frac_digits)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Closed under +, -, *, and division by nonzero elements.  The squared
    modulus ``abs2`` is rational and is always used instead of |z|, which in
    general is irrational and never formed.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("GaussianRational is immutable")

    # -- ring/field operations ------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ------------------------------------------------------------
    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> mpq:
        """|z|^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return format_fraction(self.re)
        return f"({format_fraction(self.re)}{'+' if self.im > 0 else '-'}{format_fraction(abs(self.im))}i)"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, type(ZERO), type(mpz(0)))):
        return GaussianRational(x)
    return NotImplemented


I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# enclosures
# ---------------------------------------------------------------------------

class Enclosure:
    """Exact rational interval [lo, hi] guaranteed to contain a real value.

    All interval operations here are exact (endpoints stay rational, nothing
    is rounded), so the result interval always contains the exact image of
    the operand intervals.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = mpq(lo)
        hi = lo if hi is None else mpq(hi)
        if lo > hi:
            raise ValueError("enclosure endpoints out of order")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *a):
        raise AttributeError("Enclosure is immutable")

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    @property
    def mid(self) -> mpq:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = mpq(x)
        return self.lo <= x <= self.hi

    def intersects(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        o = other if isinstance(other, Enclosure) else Enclosure(other)
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, Enclosure) else Enclosure(other)
        return Enclosure(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return Enclosure(other) - self

    def __neg__(self):
        return Enclosure(-self.hi, -self.lo)

    def __mul__(self, other):
        o = other if isinstance(other, Enclosure) else Enclosure(other)
        c = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enclosure(min(c), max(c))

    __rmul__ = __mul__

    def widened(self, slack) -> "Enclosure":
        slack = mpq(slack)
        if slack < 0:
            raise ValueError("negative widening")
        return Enclosure(self.lo - slack, self.hi + slack)

    def __repr__(self):
        return f"[{format_fraction(self.lo)}, {format_fraction(self.hi)}]"


class ComplexEnclosure:
    """Axis-aligned rational rectangle containing a complex value."""

    __slots__ = ("re", "im")

    def __init__(self, re: Enclosure, im: Enclosure):
        object.__setattr__(self, "re", re if isinstance(re, Enclosure) else Enclosure(re))
        object.__setattr__(self, "im", im if isinstance(im, Enclosure) else Enclosure(im))

    def __setattr__(self, *a):
        raise AttributeError("ComplexEnclosure is immutable")

    def __add__(self, other):
        o = _as_rect(other)
        return ComplexEnclosure(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_rect(other)
        return ComplexEnclosure(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return _as_rect(other) - self

    def __mul__(self, other):
        o = _as_rect(other)
        return ComplexEnclosure(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexEnclosure(-self.re, -self.im)

    def contains(self, z: GaussianRational) -> bool:
        return self.re.contains(z.re) and self.im.contains(z.im)

    def __repr__(self):
        return f"({self.re!r} + {self.im!r} i)"


def _as_rect(x):
    if isinstance(x, ComplexEnclosure):
        return x
    if isinstance(x, GaussianRational):
        return ComplexEnclosure(Enclosure(x.re), Enclosure(x.im))
    if isinstance(x, Enclosure):
        return ComplexEnclosure(x, Enclosure(0))
    return ComplexEnclosure(Enclosure(x), Enclosure(0))


# ---------------------------------------------------------------------------
# pi
# ---------------------------------------------------------------------------

def _arctan_inv_enclosure(x: int, width_bound) -> Enclosure:
    """Enclosure of arctan(1/x) for integer x >= 2.

    Alternating series sum_k (-1)^k / ((2k+1) x^(2k+1)): terms decrease in
    magnitude, so the error after truncation is bounded by the first omitted
    term and has its sign, which brackets the value between consecutive
    partial sums.
    """
    width_bound = mpq(width_bound)
    inv2 = mpq(1, x * x)
    term = mpq(1, x)
    s = mpq(0)
    k = 0
    while True:
        s_next = s + (term / (2 * k + 1) if k % 2 == 0 else -term / (2 * k + 1))
        term *= inv2
        k += 1
        nxt = term / (2 * k + 1)
        if nxt <= width_bound and k >= 2:
            lo, hi = (s_next - nxt, s_next) if k % 2 == 1 else (s_next, s_next + nxt)
            return Enclosure(lo, hi)
        s = s_next


def pi_enclosure(width_bound) -> Enclosure:
    """Certified enclosure of pi of width at most ``width_bound``.

    Machin's identity pi = 16 arctan(1/5) - 4 arctan(1/239) with alternating
    series tails; all arithmetic exact.
    """
    width_bound = mpq(width_bound)
    if width_bound <= 0:
        raise ValueError("width_bound must be positive")
    a5 = _arctan_inv_enclosure(5, width_bound / 64)
    a239 = _arctan_inv_enclosure(239, width_bound / 16)
    out = Enclosure(16) * a5 - Enclosure(4) * a239
    assert out.width <= width_bound
    return out


_TWO_PI_CACHE: dict[mpq, Enclosure] = {}


def two_pi_enclosure(width_bound) -> Enclosure:
    width_bound = mpq(width_bound)
    e = _TWO_PI_CACHE.get(width_bound)
    if e is None:
        e = Enclosure(2) * pi_enclosure(width_bound / 2)
        _TWO_PI_CACHE[width_bound] = e
    return e


# ---------------------------------------------------------------------------
# cos / sin
# ---------------------------------------------------------------------------

def _round_nearest(x: mpq) -> int:
    """Nearest integer, symmetric around 0 (ties away from zero)."""
    if x < 0:
        return -_round_nearest(-x)
    n = x.numerator
    d = x.denominator
    return int((2 * n + d) // (2 * d))


def _taylor_pair(m: mpq, tail_bound: mpq):
    """(cos partial sum, sin partial sum, remainder bound) at rational m, |m|<=4."""
    abs_m = abs(m)
    cos_s = mpq(1)
    sin_s = mpq(0)
    term = mpq(1)  # m^n / n!
    abs_term = mpq(1)  # |m|^n / n!
    n = 0
    while True:
        n += 1
        term = term * m / n
        abs_term = abs_term * abs_m / n
        if n % 2 == 1:
            sin_s += term if (n % 4 == 1) else -term
        else:
            cos_s += term if (n % 4 == 0) else -term
        # remainder after order n is bounded by |m|^(n+1)/(n+1)!
        rem = abs_term * abs_m / (n + 1)
        if rem <= tail_bound and n >= 4:
            return cos_s, sin_s, rem


def _cos_sin_enclose(x, tail_bound):
    x = mpq(x)
    tail_bound = mpq(tail_bound)
    if tail_bound <= 0:
        raise ValueError("tail_bound must be positive")
    # Range reduction: subtract k*(2 pi) so the reduced argument sits in
    # [-4, 4]; the 2 pi enclosure is chosen fine enough that the reduction
    # slack k*width/2 stays below the requested tail.
    if abs(x) <= 4:
        k = 0
        m = x
        slack = mpq(0)
    else:
        approx = two_pi_enclosure(mpq(1, 10**30))
        k = _round_nearest(x / approx.mid)
        w = min(tail_bound / (4 * abs(k)), mpq(1, 10**30))
        tp = two_pi_enclosure(w)
        m = x - k * tp.mid
        slack = abs(k) * tp.width / 2
        if abs(m) > 4:  # |x - k 2pi| <= pi + tiny, so this cannot trip
            raise AssertionError("range reduction failed")
    cos_s, sin_s, rem = _taylor_pair(m, tail_bound)
    pad = rem + slack
    return Enclosure(cos_s - pad, cos_s + pad), Enclosure(sin_s - pad, sin_s + pad)


def cos_enclose(x, tail_bound) -> Enclosure:
    """Certified enclosure of cos(x) for rational x.

    Width is at most 2*tail_bound plus the (strictly smaller) range
    reduction slack.
    """
    return _cos_sin_enclose(x, tail_bound)[0]


def sin_enclose(x, tail_bound) -> Enclosure:
    """Certified enclosure of sin(x) for rational x."""
    return _cos_sin_enclose(x, tail_bound)[1]


def exp_i_enclose(x, tail_bound) -> ComplexEnclosure:
    """Certified rectangle containing e^{ix} = (cos x, sin x)."""
    c, s = _cos_sin_enclose(x, tail_bound)
    return ComplexEnclosure(c, s)
