"""Dense exact polynomials in monomial, Chebyshev and Lagrange form.

Coefficients are duck-typed: plain ``gmpy2.mpq`` rationals for the real
polynomials that dominate the heavy computations, or
:class:`~nlsverify.exact.GaussianRational` for complex ones.  Integer zeros
are allowed inside coefficient lists (they interoperate with both scalar
types), which keeps the generic code free of coercions.

Representations
---------------
* ``MonoPoly1``  -- univariate, coefficient list indexed by power.
* ``ChebPoly1``  -- univariate, coefficients of T_n composed with the affine
  map of a rational domain [a, b] onto [-1, 1].
* ``LagPoly1``   -- univariate, values on pairwise distinct rational nodes.
* ``MonoPoly2``  -- bivariate, ragged coefficient rows; entry (j, k) is the
  coefficient of y^j a^k.

All operations are exact; nothing here ever rounds.
"""

from __future__ import annotations

from gmpy2 import bincoef, lcm, mpq, mpz

from .exact import GaussianRational


class ExactDivisionError(ArithmeticError):
    """Raised when a division that a construction claims to be exact is not.

    This error is a verification failure signal: the vanishing conditions
    that justify the division did not hold.
    """


class DegreeError(AssertionError):
    """Raised when a constructed object exceeds its asserted degree bound."""


# ---------------------------------------------------------------------------
# coefficient-list helpers (shared by all representations)
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def _add_lists(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = out[i] + v
    return _trim(out)


def _neg_list(a: list) -> list:
    return [-v for v in a]


def _scale_list(a: list, s) -> list:
    if s == 0:
        return []
    return [v * s for v in a]


def _is_rational_list(a: list) -> bool:
    return all(not isinstance(c, GaussianRational) for c in a)


def _int_list(a: list):
    """Common denominator D and integer numerators of a rational list."""
    qs = [mpq(c) for c in a]
    D = mpz(1)
    for c in qs:
        D = lcm(D, c.denominator)
    return D, [mpz(c.numerator * (D // c.denominator)) for c in qs]


def _pack_signed(A: list, bits: int) -> mpz:
    v = mpz(0)
    for j in range(len(A) - 1, -1, -1):
        v = (v << bits) + A[j]
    return v


def _unpack_signed(v: mpz, bits: int, count: int) -> list:
    mask = (mpz(1) << bits) - 1
    half = mpz(1) << (bits - 1)
    full = mpz(1) << bits
    out = []
    for _ in range(count):
        d = v & mask
        if d >= half:
            d -= full
        out.append(d)
        v = (v - d) >> bits
    assert v == 0, "Kronecker unpack leftover"
    return out


def _kron_conv(A: list, B: list) -> list:
    """Exact integer convolution via Kronecker substitution: evaluate both
    polynomials at 2^bits and let GMP's big multiplication do the work."""
    ba = max(x.bit_length() for x in A)
    bb = max(x.bit_length() for x in B)
    nmin = min(len(A), len(B))
    bits = ba + bb + nmin.bit_length() + 2
    prod = _pack_signed(A, bits) * _pack_signed(B, bits)
    return _unpack_signed(prod, bits, len(A) + len(B) - 1)


_KRON_THRESHOLD = 4000


def _mul_lists(a: list, b: list) -> list:
    if not a or not b:
        return []
    if len(a) * len(b) >= _KRON_THRESHOLD and _is_rational_list(a) and _is_rational_list(b):
        Da, A = _int_list(a)
        Db, B = _int_list(b)
        D = Da * Db
        return _trim([mpq(c, D) for c in _kron_conv(A, B)])
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return _trim(out)


def _eval_list(a: list, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


# ---------------------------------------------------------------------------
# univariate monomial polynomials
# ---------------------------------------------------------------------------

class MonoPoly1:
    """Univariate polynomial in the monomial basis; zero has degree -1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        _trim(c)
        self.coeffs = c

    @classmethod
    def const(cls, v):
        return cls([v])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, MonoPoly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def coeff(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other):
        o = _as_mono(other)
        return MonoPoly1(_add_lists(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_mono(other)
        return MonoPoly1(_add_lists(self.coeffs, _neg_list(o.coeffs)))

    def __rsub__(self, other):
        return _as_mono(other) - self

    def __neg__(self):
        return MonoPoly1(_neg_list(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, MonoPoly1):
            return MonoPoly1(_mul_lists(self.coeffs, other.coeffs))
        return MonoPoly1(_scale_list(self.coeffs, other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MonoPoly1([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        return _eval_list(self.coeffs, x)

    def derivative(self, m: int = 1) -> "MonoPoly1":
        """Exact m-th derivative; orders above the degree give zero."""
        if m < 0:
            raise ValueError("derivative order must be >= 0")
        c = self.coeffs
        for _ in range(m):
            c = [j * c[j] for j in range(1, len(c))]
        return MonoPoly1(c)

    def antiderivative(self) -> "MonoPoly1":
        return MonoPoly1([0] + [c * mpq(1, j + 1) for j, c in enumerate(self.coeffs)])

    def integrate(self, a, b):
        """Exact integral over [a, b]."""
        F = self.antiderivative()
        return F(mpq(b)) - F(mpq(a))

    def compose(self, q: "MonoPoly1") -> "MonoPoly1":
        """Exact composition p(q(x)) by Horner over the polynomial ring."""
        out = MonoPoly1([])
        for c in reversed(self.coeffs):
            out = out * q + MonoPoly1([c] if c != 0 else [])
        return out

    def affine_compose(self, alpha, beta) -> "MonoPoly1":
        """p(alpha*x + beta), exact (degree preserved when alpha != 0)."""
        return self.compose(MonoPoly1([beta, alpha]))

    def divide_linear(self, root, multiplicity: int = 1) -> "MonoPoly1":
        """Exact quotient p / (x - root)^multiplicity.

        Raises ExactDivisionError when the claimed factor does not divide;
        that failure is how vanishing checks report themselves.
        """
        r = root
        c = list(self.coeffs)
        for _ in range(multiplicity):
            if not c:
                break
            out = [0] * (len(c) - 1)
            acc = c[-1]
            for j in range(len(c) - 2, -1, -1):
                out[j] = acc
                acc = c[j] + r * acc
            if acc != 0:
                raise ExactDivisionError("claimed factor does not divide")
            c = _trim(out)
        return MonoPoly1(c)

    def real_part(self) -> "MonoPoly1":
        return MonoPoly1([c.re if isinstance(c, GaussianRational) else c for c in self.coeffs])

    def imag_part(self) -> "MonoPoly1":
        return MonoPoly1([c.im if isinstance(c, GaussianRational) else 0 for c in self.coeffs])

    def conjugate(self) -> "MonoPoly1":
        return MonoPoly1([c.conjugate() if isinstance(c, GaussianRational) else c for c in self.coeffs])

    def __repr__(self):
        return f"MonoPoly1(deg={self.degree})"


def _as_mono(x) -> MonoPoly1:
    if isinstance(x, MonoPoly1):
        return x
    return MonoPoly1([x])


# ---------------------------------------------------------------------------
# Chebyshev representation
# ---------------------------------------------------------------------------

def monomial_cheb_coeffs(n: int) -> list:
    """Chebyshev coefficients of x^n on [-1, 1] (binomial formula).

    x^n = sum_k C^k_n T_k with C given by central binomial coefficients;
    used as an independent cross-check of the Horner-based conversion.
    """
    out = [mpq(0)] * (n + 1)
    if n % 2 == 1:
        for k in range((n - 1) // 2 + 1):
            out[2 * k + 1] = mpq(bincoef(n, (n - 1) // 2 - k), 2 ** (n - 1))
    else:
        out[0] = mpq(bincoef(n, n // 2), 2 ** n)
        for k in range(1, n // 2 + 1):
            out[2 * k] = mpq(bincoef(n, n // 2 - k), 2 ** (n - 1))
    return out


class ChebPoly1:
    """Polynomial as sum c_n T_n(phi^{-1}(x)) on a rational domain [a, b]."""

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs, domain):
        a, b = mpq(domain[0]), mpq(domain[1])
        if not a < b:
            raise ValueError("domain endpoints out of order")
        c = list(coeffs)
        _trim(c)
        self.coeffs = c
        self.domain = (a, b)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _check_domain(self, other: "ChebPoly1"):
        if self.domain != other.domain:
            raise ValueError("Chebyshev domain mismatch")

    def __add__(self, other):
        self._check_domain(other)
        return ChebPoly1(_add_lists(self.coeffs, other.coeffs), self.domain)

    def __sub__(self, other):
        self._check_domain(other)
        return ChebPoly1(_add_lists(self.coeffs, _neg_list(other.coeffs)), self.domain)

    def __neg__(self):
        return ChebPoly1(_neg_list(self.coeffs), self.domain)

    def scale(self, s) -> "ChebPoly1":
        return ChebPoly1(_scale_list(self.coeffs, s), self.domain)

    def __call__(self, x):
        """Evaluation by the three-term recurrence at an exact point."""
        a, b = self.domain
        t = (2 * mpq(x) - a - b) / (b - a)
        if not self.coeffs:
            return mpq(0)
        v = self.coeffs[0]
        if len(self.coeffs) == 1:
            return v + 0 * t
        tk_prev, tk = 1, t
        v = v + self.coeffs[1] * t
        for c in self.coeffs[2:]:
            tk_prev, tk = tk, 2 * t * tk - tk_prev
            if c != 0:
                v = v + c * tk
        return v

    def to_mono(self) -> MonoPoly1:
        """Exact conversion to the monomial basis (in the original variable)."""
        a, b = self.domain
        t = MonoPoly1([mpq(-(a + b), b - a), mpq(2, b - a)])
        out = MonoPoly1([])
        tk_prev = MonoPoly1([1])
        tk = t
        if self.coeffs:
            out = out + MonoPoly1([self.coeffs[0]])
        if len(self.coeffs) > 1:
            out = out + self.coeffs[1] * tk
        for c in self.coeffs[2:]:
            tk_prev, tk = tk, 2 * (t * tk) - tk_prev
            if c != 0:
                out = out + c * tk
        return out

    def __repr__(self):
        return f"ChebPoly1(deg={self.degree}, domain=({self.domain[0]},{self.domain[1]}))"


def cheb_mul(p: ChebPoly1, q: ChebPoly1) -> ChebPoly1:
    """Exact product in the Chebyshev basis via T_m T_n = (T_{m+n}+T_{|m-n|})/2.

    This avoids the detour through monomials when building the very high
    degree products of the oscillatory estimates.
    """
    if p.domain != q.domain:
        raise ValueError("Chebyshev domain mismatch")
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ChebPoly1([], p.domain)
    if len(a) * len(b) >= _KRON_THRESHOLD and _is_rational_list(a) and _is_rational_list(b):
        # 2 T_m T_n = T_{m+n} + T_{|m-n|}: one convolution and one
        # correlation, both as Kronecker products
        Da, A = _int_list(a)
        Db, B = _int_list(b)
        conv = _kron_conv(A, B)
        corr = _kron_conv(A, B[::-1])  # corr[len(B)-1+d] = sum_m A_m B_{m+d}
        out = [mpz(0)] * (len(a) + len(b) - 1)
        for i, v in enumerate(conv):
            out[i] += v
        nb = len(B)
        for d in range(len(out)):
            # sum over |m-n| = d of A_m B_n
            if d == 0:
                out[0] += corr[nb - 1]
            else:
                if nb - 1 + d < len(corr):
                    out[d] += corr[nb - 1 + d]
                if nb - 1 - d >= 0:
                    out[d] += corr[nb - 1 - d]
        D = 2 * Da * Db
        return ChebPoly1([mpq(c, D) for c in out], p.domain)
    out = [0] * (len(a) + len(b) - 1)
    half = mpq(1, 2)
    for m, am in enumerate(a):
        if am == 0:
            continue
        for n, bn in enumerate(b):
            if bn == 0:
                continue
            v = half * (am * bn)
            out[m + n] = out[m + n] + v
            d = m - n if m >= n else n - m
            out[d] = out[d] + v
    return ChebPoly1(out, p.domain)


def _mono_coeffs_to_cheb(coeffs: list, domain) -> list:
    """Chebyshev coefficients on ``domain`` of a monomial coefficient list.

    Fused Horner: q <- (alpha t + beta) q + c_j carried out directly in the
    Chebyshev basis, where x = alpha t + beta maps [-1,1] onto the domain.
    Exact, O(d^2), no large binomials.  Rational input runs on an all-integer
    variant (denominators are tracked as a single scale factor).
    """
    if coeffs and _is_rational_list(coeffs):
        return _mono_coeffs_to_cheb_int(coeffs, domain)
    a, b = mpq(domain[0]), mpq(domain[1])
    alpha = (b - a) / 2
    beta = (a + b) / 2
    half_alpha = alpha / 2
    out: list = []
    for c in reversed(coeffs):
        # multiply out by (alpha t + beta) in Chebyshev basis
        n = len(out)
        nxt = [0] * (n + 1 if n else 0)
        for k, v in enumerate(out):
            if v == 0:
                continue
            nxt[k] = nxt[k] + beta * v
            if k == 0:
                nxt[1] = nxt[1] + alpha * v
            else:
                nxt[k - 1] = nxt[k - 1] + half_alpha * v
                if k + 1 < len(nxt):
                    nxt[k + 1] = nxt[k + 1] + half_alpha * v
                else:
                    nxt.append(half_alpha * v)
        out = nxt
        if c != 0:
            if not out:
                out = [c]
            else:
                out[0] = out[0] + c
    return _trim(out)


def _mono_coeffs_to_cheb_int(coeffs: list, domain) -> list:
    """All-integer version of the fused Horner basis change."""
    a, b = mpq(domain[0]), mpq(domain[1])
    alpha = (b - a) / 2
    beta = (a + b) / 2
    half_alpha = alpha / 2
    s = lcm(lcm(alpha.denominator, beta.denominator), half_alpha.denominator)
    A = mpz(alpha * s)
    HA = mpz(half_alpha * s)
    Bt = mpz(beta * s)
    D, C = _int_list(coeffs)
    out: list = []
    pw = mpz(1)  # s^t, the scale accumulated by t multiply steps
    for c in reversed(C):
        n = len(out)
        nxt = [mpz(0)] * (n + 1 if n else 0)
        for k in range(n):
            v = out[k]
            if v == 0:
                continue
            nxt[k] += Bt * v
            if k == 0:
                nxt[1] += A * v
            else:
                nxt[k - 1] += HA * v
                if k + 1 < len(nxt):
                    nxt[k + 1] += HA * v
                else:
                    nxt.append(HA * v)
        out = nxt
        pw *= s
        if c:
            if not out:
                out = [c * pw]
            else:
                out[0] += c * pw
    Dtot = D * pw
    return _trim([mpq(o, Dtot) for o in out])


def mono_to_cheb(p: MonoPoly1, domain) -> ChebPoly1:
    """Exact representation change from monomial to Chebyshev on [a, b]."""
    return ChebPoly1(_mono_coeffs_to_cheb(p.coeffs, domain), domain)


def rebase_cheb(p: ChebPoly1, domain) -> ChebPoly1:
    """Re-express a Chebyshev polynomial on a different (sub)domain.

    The argument map between the two normalized variables is affine, so the
    three-term recurrence with a degree-1 Chebyshev polynomial does the job
    exactly.
    """
    a, b = mpq(domain[0]), mpq(domain[1])
    A, B = p.domain
    # normalized new variable t -> normalized old variable u = c0 + c1 t
    c1 = (b - a) / (B - A)
    c0 = (a + b - A - B) / (B - A)
    u = ChebPoly1([c0, c1], (mpq(-1), mpq(1)))
    out = clenshaw_cheb(p.coeffs, u)
    return ChebPoly1(out.coeffs, (a, b))


def clenshaw_cheb(coeffs: list, u: ChebPoly1) -> ChebPoly1:
    """sum c_n T_n(u) for a Chebyshev-represented polynomial argument u.

    Clenshaw recurrence in the polynomial ring: b_k = c_k + 2 u b_{k+1} -
    b_{k+2}; result = c_0 + u b_1 - b_2 stays exact throughout.
    """
    dom = u.domain
    zero = ChebPoly1([], dom)
    if not coeffs:
        return zero
    if len(coeffs) == 1:
        return ChebPoly1([coeffs[0]], dom)
    b1, b2 = zero, zero
    for c in reversed(coeffs[1:]):
        b1, b2 = ChebPoly1(_add_lists(cheb_mul(u, b1).scale(2).coeffs, _add_lists([c], _neg_list(b2.coeffs))), dom), b1
    out = cheb_mul(u, b1)
    return ChebPoly1(_add_lists(out.coeffs, _add_lists([coeffs[0]], _neg_list(b2.coeffs))), dom)


def compose(p: ChebPoly1, q) -> "MonoPoly1 | ChebPoly1":
    """Exact composition p(q(x)) for a Chebyshev p and polynomial q.

    q may be a MonoPoly1 (result monomial) or a ChebPoly1 (result Chebyshev
    on q's domain); both paths run the Clenshaw recurrence with polynomial
    arguments.
    """
    a, b = p.domain
    if isinstance(q, MonoPoly1):
        # normalized argument u = (2q - a - b)/(b - a)
        u = (q * mpq(2, b - a)) + MonoPoly1([mpq(-(a + b), b - a)])
        if not p.coeffs:
            return MonoPoly1([])
        if len(p.coeffs) == 1:
            return MonoPoly1([p.coeffs[0]])
        b1 = MonoPoly1([])
        b2 = MonoPoly1([])
        for c in reversed(p.coeffs[1:]):
            b1, b2 = 2 * (u * b1) - b2 + MonoPoly1([c] if c != 0 else []), b1
        return u * b1 - b2 + MonoPoly1([p.coeffs[0]])
    if isinstance(q, ChebPoly1):
        u = ChebPoly1(_add_lists(_scale_list(q.coeffs, mpq(2, b - a)), [mpq(-(a + b), b - a)]), q.domain)
        return clenshaw_cheb(p.coeffs, u)
    raise TypeError("compose expects a MonoPoly1 or ChebPoly1 argument")


# ---------------------------------------------------------------------------
# Lagrange representation
# ---------------------------------------------------------------------------

def product_expand(xi: list) -> list:
    """Coefficients a_{n,k} of prod_j (x + xi^j), by the defining recursion."""
    coeffs = [mpq(1)]
    for x in xi:
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] + x * c
        coeffs = nxt
    return coeffs


class LagPoly1:
    """Interpolating polynomial given by values on pairwise distinct nodes."""

    __slots__ = ("nodes", "values")

    def __init__(self, nodes, values):
        nodes = [mpq(x) for x in nodes]
        values = list(values)
        if len(nodes) != len(values):
            raise ValueError("node/value count mismatch")
        if len(set(nodes)) != len(nodes):
            raise ValueError("degenerate node set")
        self.nodes = nodes
        self.values = values

    @property
    def degree(self) -> int:
        return len(self.nodes) - 1

    def _basis_matrix(self) -> list:
        """L(xi)^j_k: monomial coefficients of the k-th Lagrange basis poly."""
        d = self.degree
        cols = []
        for k in range(d + 1):
            others = [self.nodes[j] for j in range(d + 1) if j != k]
            num = product_expand([-x for x in others])
            den = mpq(1)
            for x in others:
                den *= self.nodes[k] - x
            cols.append([c / den for c in num])
        return cols  # cols[k][j] = L^j_k

    def to_mono(self) -> MonoPoly1:
        """Exact interpolant in the monomial basis."""
        d = self.degree
        cols = self._basis_matrix()
        out = [0] * (d + 1)
        for k in range(d + 1):
            v = self.values[k]
            if v == 0:
                continue
            col = cols[k]
            for j in range(d + 1):
                out[j] = out[j] + col[j] * v
        return MonoPoly1(out)

    def derivative(self, m: int = 1) -> MonoPoly1:
        """m-th derivative straight from node values: factorial-weighted rows
        of the node-to-monomial matrix."""
        d = self.degree
        if m > d:
            return MonoPoly1([])
        cols = self._basis_matrix()
        out = [0] * (d - m + 1)
        for k in range(d + 1):
            v = self.values[k]
            if v == 0:
                continue
            col = cols[k]
            for j in range(d - m + 1):
                w = 1
                for t in range(j + 1, j + m + 1):
                    w *= t
                out[j] = out[j] + w * col[j + m] * v
        return MonoPoly1(out)

    def __call__(self, x):
        return self.to_mono()(x)


def lagrange_to_mono(p: LagPoly1) -> MonoPoly1:
    return p.to_mono()


def sample(p: MonoPoly1, nodes) -> LagPoly1:
    return LagPoly1(nodes, [p(mpq(x)) for x in nodes])


def derivative(p, m: int = 1) -> MonoPoly1:
    """m-th derivative of a MonoPoly1 or LagPoly1, as a MonoPoly1."""
    if isinstance(p, (MonoPoly1, LagPoly1)):
        return p.derivative(m)
    raise TypeError("derivative expects MonoPoly1 or LagPoly1")


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------

class MonoPoly2:
    """Dense bivariate polynomial; rows[j][k] is the coefficient of y^j a^k."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rs = [_trim(list(r)) for r in rows]
        while rs and not rs[-1]:
            rs.pop()
        self.rows = rs

    @classmethod
    def const(cls, v):
        return cls([[v]])

    @classmethod
    def y(cls):
        return cls([[], [1]])

    @classmethod
    def a(cls):
        return cls([[0, 1]])

    @classmethod
    def from_univar1(cls, p: MonoPoly1) -> "MonoPoly2":
        """Promote a polynomial in the first variable y."""
        return cls([[c] for c in p.coeffs])

    @classmethod
    def from_univar2(cls, p: MonoPoly1) -> "MonoPoly2":
        """Promote a polynomial in the second variable a."""
        return cls([list(p.coeffs)])

    @property
    def deg1(self) -> int:
        return len(self.rows) - 1

    @property
    def deg2(self) -> int:
        return max((len(r) for r in self.rows), default=0) - 1

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        return isinstance(other, MonoPoly2) and self.rows == other.rows

    def __add__(self, other):
        o = _as_mono2(other)
        n = max(len(self.rows), len(o.rows))
        rows = []
        for j in range(n):
            r1 = self.rows[j] if j < len(self.rows) else []
            r2 = o.rows[j] if j < len(o.rows) else []
            rows.append(_add_lists(r1, r2))
        return MonoPoly2(rows)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_mono2(other))

    def __rsub__(self, other):
        return _as_mono2(other) - self

    def __neg__(self):
        return MonoPoly2([_neg_list(list(r)) for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, MonoPoly2):
            if isinstance(other, MonoPoly1):
                raise TypeError("promote MonoPoly1 with from_univar1/from_univar2 first")
            return MonoPoly2([_scale_list(list(r), other) for r in self.rows])
        if not self.rows or not other.rows:
            return MonoPoly2([])
        n1, n2 = len(self.rows), len(other.rows)
        w1 = max(len(r) for r in self.rows)
        w2 = max(len(r) for r in other.rows)
        if n1 * w1 * n2 * w2 >= _KRON2_THRESHOLD and \
                all(_is_rational_list(r) for r in self.rows) and \
                all(_is_rational_list(r) for r in other.rows):
            return _mul2_kron(self.rows, other.rows, n1, w1, n2, w2)
        rows = [[] for _ in range(n1 + n2 - 1)]
        for j1, r1 in enumerate(self.rows):
            if not r1:
                continue
            for j2, r2 in enumerate(other.rows):
                if not r2:
                    continue
                rows[j1 + j2] = _add_lists(rows[j1 + j2], _mul_lists(r1, r2))
        return MonoPoly2(rows)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MonoPoly2([[1]])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, y, a):
        v = 0
        for r in reversed(self.rows):
            v = v * y + _eval_list(r, a)
        return v

    def subs2(self, a0) -> MonoPoly1:
        """Substitute a rational for the second variable; polynomial in y."""
        return MonoPoly1([_eval_list(r, a0) for r in self.rows])

    def subs1(self, y0) -> MonoPoly1:
        """Substitute a rational for the first variable; polynomial in a."""
        out: list = []
        for r in reversed(self.rows):
            out = _add_lists(_scale_list(out, y0), r)
        return MonoPoly1(out)

    def deriv1(self, m: int = 1) -> "MonoPoly2":
        rows = self.rows
        for _ in range(m):
            rows = [_scale_list(list(rows[j]), j) for j in range(1, len(rows))]
        return MonoPoly2(rows)

    def deriv2(self, m: int = 1) -> "MonoPoly2":
        rows = [list(r) for r in self.rows]
        for _ in range(m):
            rows = [[j * r[j] for j in range(1, len(r))] for r in rows]
        return MonoPoly2(rows)

    def divide_linear1(self, root, multiplicity: int = 1) -> "MonoPoly2":
        """Exact quotient by (y - root)^multiplicity in the first variable."""
        r = mpq(root)
        rows = [list(row) for row in self.rows]
        for _ in range(multiplicity):
            if not rows:
                break
            out = [[] for _ in range(len(rows) - 1)]
            acc = rows[-1]
            for j in range(len(rows) - 2, -1, -1):
                out[j] = acc
                acc = _add_lists(list(rows[j]), _scale_list(acc, r))
            if acc:
                raise ExactDivisionError("claimed factor does not divide")
            rows = out
            while rows and not rows[-1]:
                rows.pop()
        return MonoPoly2(rows)

    def real_part(self) -> "MonoPoly2":
        return MonoPoly2([[c.re if isinstance(c, GaussianRational) else c for c in r] for r in self.rows])

    def imag_part(self) -> "MonoPoly2":
        return MonoPoly2([[c.im if isinstance(c, GaussianRational) else 0 for c in r] for r in self.rows])

    def conjugate(self) -> "MonoPoly2":
        return MonoPoly2([[c.conjugate() if isinstance(c, GaussianRational) else c for c in r] for r in self.rows])

    def assert_degree(self, d1: int, d2: int, what: str = "") -> "MonoPoly2":
        if self.deg1 > d1 or (self.rows and self.deg2 > d2):
            raise DegreeError(
                f"degree bound violated{' for ' + what if what else ''}: "
                f"got ({self.deg1},{self.deg2}), asserted ({d1},{d2})"
            )
        return self

    def __repr__(self):
        return f"MonoPoly2(deg=({self.deg1},{self.deg2}))"


def _as_mono2(x) -> MonoPoly2:
    if isinstance(x, MonoPoly2):
        return x
    return MonoPoly2([[x]])


_KRON2_THRESHOLD = 20000


def _mul2_kron(rows1, rows2, n1, w1, n2, w2) -> MonoPoly2:
    """Bivariate product as one giant integer multiplication.

    Both operands are packed with a row stride wide enough for the output
    rows (w1 + w2 - 1 entries), so the 1D Kronecker convolution of the
    packings is exactly the 2D convolution.
    """
    flat1, flat2 = [], []
    for r in rows1:
        flat1.extend(r)
    for r in rows2:
        flat2.extend(r)
    D1, _ = _int_list(flat1)
    D2, _ = _int_list(flat2)

    def ints(rows, D):
        return [[mpz(mpq(c).numerator * (D // mpq(c).denominator)) for c in r] for r in rows]

    I1 = ints(rows1, D1)
    I2 = ints(rows2, D2)
    b1 = max((x.bit_length() for r in I1 for x in r), default=1)
    b2 = max((x.bit_length() for r in I2 for x in r), default=1)
    terms = min(n1, n2) * min(w1, w2)
    bits = b1 + b2 + terms.bit_length() + 2
    stride = w1 + w2 - 1

    def pack(I, w):
        v = mpz(0)
        shift_row = bits * stride
        for r in reversed(I):
            v <<= shift_row
            if r:
                v += _pack_signed(r + [mpz(0)] * (stride - len(r)), bits)
        return v

    prod = pack(I1, w1) * pack(I2, w2)
    n_out = n1 + n2 - 1
    digits = _unpack_signed(prod, bits, n_out * stride)
    D = D1 * D2
    rows = []
    for j in range(n_out):
        rows.append([mpq(c, D) for c in digits[j * stride:(j + 1) * stride]])
    return MonoPoly2(rows)


def poly_to_text(p: MonoPoly1) -> str:
    """Serialize a univariate polynomial in the fraction text format, one
    'power  re  [im]' line per nonzero coefficient; for debugging reports."""
    from .exact import format_fraction
    lines = []
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if isinstance(c, GaussianRational):
            lines.append(f"{j} {format_fraction(c.re)} {format_fraction(c.im)}")
        else:
            lines.append(f"{j} {format_fraction(mpq(c))}")
    return "\n".join(lines) + ("\n" if lines else "")


def poly_from_text(text: str) -> MonoPoly1:
    from .exact import parse_fraction
    coeffs: dict[int, object] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        j = int(parts[0])
        if len(parts) == 2:
            coeffs[j] = parse_fraction(parts[1])
        elif len(parts) == 3:
            coeffs[j] = GaussianRational(parse_fraction(parts[1]), parse_fraction(parts[2]))
        else:
            raise ValueError(f"bad polynomial line: {line!r}")
    if not coeffs:
        return MonoPoly1([])
    out = [0] * (max(coeffs) + 1)
    for j, c in coeffs.items():
        out[j] = c
    return MonoPoly1(out)


class PolyFraction:
    """Quotient of polynomials in the trailing variable with a real
    denominator that is certified nonvanishing elsewhere.

    Scalar substitution is exact; no reduction to lowest terms is attempted.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MonoPoly1, den: MonoPoly1):
        self.num = num
        self.den = den

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("PolyFraction denominator vanished")
        return self.num(x) / d
