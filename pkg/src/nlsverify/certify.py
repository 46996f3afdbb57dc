"""Certified extrema of rational functions on rational boxes.

The method is grid evaluation with an exact Lipschitz budget: the per-axis
lattice counts are

    M_j = min{ m in N : m >= (n/eps) (b_j - a_j) ||d_j(p) q - p d_j(q)||_T }

(with a floor of 1), and then the lattice extremum of p/q differs from the
true extremum over the box by at most eps / min(q^2).  Everything -- the
T-norms, the lattice points a_j + (b_j - a_j) k / M_j, and the evaluations --
is exact rational arithmetic.

Lattice scans over millions of points run on an integer difference engine:
after an affine substitution the values D * p(k) along an arithmetic
progression satisfy a constant (deg p)-th finite difference, so each further
point costs deg p big-integer additions instead of a Horner evaluation.
A floating shadow (with a generous safety margin) prunes extremum candidates;
every surviving candidate is compared exactly, so the reported extremum is
the exact lattice extremum.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from gmpy2 import lcm, mpq, mpz

from .poly import MonoPoly1, MonoPoly2
from .tnorm import tnorm1, tnorm2


class DenominatorVanished(ArithmeticError):
    """q hit zero (or an unexpected sign) on the lattice, contradicting the
    caller's positivity certificate."""


@dataclass(frozen=True)
class GridSpec:
    box: tuple
    counts: tuple
    lipschitz_norms: tuple

    @property
    def points(self) -> int:
        n = 1
        for m in self.counts:
            n *= m + 1
        return n


@dataclass(frozen=True)
class CertifiedExtremum:
    kind: str                      # "max" | "min" | "absmax" | "absmin"
    grid_value: mpq                # exact lattice extremum of p/q
    epsilon: mpq
    denominator_min_sq_lower: mpq  # caller-certified lower bound for min q^2
    certified_bound: mpq           # outward bound for the true extremum
    grid: GridSpec

    @property
    def slack(self) -> mpq:
        return self.epsilon / self.denominator_min_sq_lower


def _ceil_q(x: mpq) -> int:
    return int(-((-x.numerator) // x.denominator))


def _axis_counts(p, q, box, eps):
    """Per-axis lattice counts and the Lipschitz T-norms behind them."""
    n = len(box)
    counts = []
    norms = []
    for j in range(n):
        if n == 1:
            dp = p.derivative()
            lip = dp * q - p * q.derivative()
            norm = tnorm1(lip, box[0])
        else:
            dp = p.deriv1() if j == 0 else p.deriv2()
            dq = q.deriv1() if j == 0 else q.deriv2()
            lip = dp * q - p * dq
            norm = tnorm2(lip, box)
        a, b = box[j]
        m = _ceil_q(mpq(n, 1) / eps * (mpq(b) - mpq(a)) * norm)
        counts.append(max(1, m))
        norms.append(norm)
    return tuple(counts), tuple(norms)


# ---------------------------------------------------------------------------
# integer lattice engine (univariate core)
# ---------------------------------------------------------------------------

def _integerize(p: MonoPoly1, a, h):
    """Integer coefficients e and denominator D with D*p(a + h*t) = sum e_j t^j."""
    ph = p.affine_compose(h, a)
    coeffs = [mpq(c) for c in ph.coeffs]
    if not coeffs:
        return [mpz(0)], mpz(1)
    D = mpz(1)
    for c in coeffs:
        D = lcm(D, c.denominator)
    return [mpz(c.numerator * (D // c.denominator)) for c in coeffs], D


def _int_horner(e, k: int) -> mpz:
    v = mpz(0)
    for c in reversed(e):
        v = v * k + c
    return v


def _diff_table(e, k0: int):
    """Forward differences Delta^i N(k0), i = 0..deg, of N(k)=sum e_j k^j."""
    d = len(e) - 1
    vals = [_int_horner(e, k0 + i) for i in range(d + 1)]
    for lvl in range(1, d + 1):
        for i in range(d, lvl - 1, -1):
            vals[i] = vals[i] - vals[i - 1]
    return vals


def _log2_abs(n: mpz) -> float:
    """log2|n| to ~1e-12 accuracy, safe for arbitrarily large integers."""
    a = abs(n)
    bl = a.bit_length()
    if bl <= 53:
        return math.log2(int(a))
    return float(bl - 53) + math.log2(int(a >> (bl - 53)))


_MARGIN = 1e-6  # log2-space pruning margin, vastly above float error


def _ratio_maybe_better(sgn_c, log_c, sgn_b, log_b, want_max) -> bool:
    """Conservative 'candidate ratio could beat best' test on (sign, log2)."""
    if not want_max:
        sgn_c, sgn_b = -sgn_c, -sgn_b
    if sgn_c != sgn_b:
        return sgn_c > sgn_b
    if sgn_c > 0:
        return log_c >= log_b - _MARGIN
    if sgn_c < 0:
        return log_c <= log_b + _MARGIN
    return False  # both zero


def _chunk_scan(args):
    """Scan lattice indices [k0, k1) and return the chunk extremum.

    Returns (num, den, k) of the extremal candidate as exact integers (den
    is None when q == 1), or ("vanished", k) when the denominator hit zero
    or an unexpected sign.  The float shadow only prunes candidates that
    provably cannot win; every surviving candidate is compared exactly.
    """
    (e_p, e_q, k0, k1, mode) = args
    dp = _diff_table(e_p, k0)
    dq = _diff_table(e_q, k0) if e_q is not None else None
    deg_p = len(dp) - 1
    deg_q = len(dq) - 1 if dq is not None else 0

    want_max = mode in ("max", "absmax")
    use_abs = mode in ("absmax", "absmin")

    best_n = best_d = best_k = None
    best_sgn = 0
    best_log = 0.0

    for k in range(k0, k1):
        npv = dp[0]
        if use_abs and npv < 0:
            npv = -npv
        if dq is None:
            # polynomial target: plain exact integer comparison
            if best_n is None or ((npv > best_n) if want_max else (npv < best_n)):
                best_n, best_k = npv, k
        else:
            qv = dq[0]
            if qv == 0:
                return ("vanished", k)
            if use_abs:
                if qv < 0:
                    qv = -qv
            elif qv < 0:
                return ("vanished", k)
            sgn_c = 1 if npv > 0 else (-1 if npv < 0 else 0)
            log_c = _log2_abs(npv) - _log2_abs(qv) if sgn_c else 0.0
            if best_n is None:
                best_n, best_d, best_k = npv, qv, k
                best_sgn, best_log = sgn_c, log_c
            elif _ratio_maybe_better(sgn_c, log_c, best_sgn, best_log, want_max):
                lhs = npv * best_d
                rhs = best_n * qv
                if (lhs > rhs) if want_max else (lhs < rhs):
                    best_n, best_d, best_k = npv, qv, k
                    best_sgn, best_log = sgn_c, log_c
        for i in range(deg_p):
            dp[i] += dp[i + 1]
        if dq is not None:
            for i in range(deg_q):
                dq[i] += dq[i + 1]
    return (best_n, best_d, best_k)


def _scan_1d(p: MonoPoly1, q, a, b, M: int, mode: str, jobs: int = 1):
    """Exact lattice extremum of p/q over {a + (b-a)k/M : k = 0..M}."""
    h = (mpq(b) - mpq(a)) / M
    e_p, D_p = _integerize(p, mpq(a), h)
    if q is None:
        e_q, D_q = None, None
    else:
        e_q, D_q = _integerize(q, mpq(a), h)

    npts = M + 1
    if jobs > 1 and npts > 200_000:
        nchunks = jobs * 4
        step = (npts + nchunks - 1) // nchunks
        ranges = [(k, min(k + step, npts)) for k in range(0, npts, step)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_chunk_scan, [(e_p, e_q, k0, k1, mode) for (k0, k1) in ranges]))
    else:
        results = [_chunk_scan((e_p, e_q, 0, npts, mode))]

    want_max = mode in ("max", "absmax")
    best = None  # (value mpq, k)
    for r in results:
        if r[0] == "vanished":
            x = mpq(a) + h * r[1]
            raise DenominatorVanished(f"denominator vanished at lattice point {x}")
        n, d, k = r
        if n is None:
            continue
        val = mpq(n, D_p) if d is None else mpq(n, D_p) / mpq(d, D_q)
        if best is None or ((val > best[0]) if want_max else (val < best[0])):
            best = (val, k)
    assert best is not None
    return best


def _scan(p, q, box, counts, mode, jobs: int = 1):
    if len(box) == 1:
        val, _ = _scan_1d(p, q, box[0][0], box[0][1], counts[0], mode, jobs)
        return val
    # bivariate: iterate the (small) second axis, scan the first per slice
    (a1, b1), (a2, b2) = box
    M1, M2 = counts
    want_max = mode in ("max", "absmax")
    best = None
    for k2 in range(M2 + 1):
        a_val = mpq(a2) + (mpq(b2) - mpq(a2)) * k2 / M2
        p1 = p.subs2(a_val)
        q1 = q.subs2(a_val) if q is not None else None
        val, _ = _scan_1d(p1, q1, a1, b1, M1, mode, jobs)
        if best is None or ((val > best) if want_max else (val < best)):
            best = val
    return best


# ---------------------------------------------------------------------------
# public interface
# ---------------------------------------------------------------------------

def _normalize_inputs(p, q, box):
    box = tuple((mpq(a), mpq(b)) for (a, b) in box)
    n = len(box)
    if n == 1:
        if isinstance(p, MonoPoly2) or isinstance(q, MonoPoly2):
            raise TypeError("univariate box with bivariate polynomial")
        q = q if q is not None else MonoPoly1([1])
        return p, q, box
    if n == 2:
        q = q if q is not None else MonoPoly2([[1]])
        return p, q, box
    raise ValueError("only 1- and 2-dimensional boxes are supported")


def _grid_extremum(p, q, box, eps, mode, denominator_min_sq_lower, jobs):
    eps = mpq(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    msq = mpq(denominator_min_sq_lower)
    if msq <= 0:
        raise ValueError("denominator_min_sq_lower must be positive")
    p, q, box = _normalize_inputs(p, q, box)
    counts, norms = _axis_counts(p, q, box, eps)
    qq = None
    trivial_q = (isinstance(q, MonoPoly1) and q.coeffs == [1]) or \
                (isinstance(q, MonoPoly2) and q.rows == [[1]])
    if not trivial_q:
        qq = q
    grid_value = _scan(p, qq, box, counts, mode, jobs)
    slack = eps / msq
    if mode in ("max", "absmax"):
        certified = grid_value + slack
    else:
        certified = grid_value - slack
    return CertifiedExtremum(
        kind=mode,
        grid_value=grid_value,
        epsilon=eps,
        denominator_min_sq_lower=msq,
        certified_bound=certified,
        grid=GridSpec(box=box, counts=counts, lipschitz_norms=norms),
    )


def grid_max(p, q, box, eps, denominator_min_sq_lower=1, jobs: int = 1) -> CertifiedExtremum:
    """Certified maximum of p/q on the box: true max <= certified_bound."""
    return _grid_extremum(p, q, box, eps, "max", denominator_min_sq_lower, jobs)


def grid_min(p, q, box, eps, denominator_min_sq_lower=1, jobs: int = 1) -> CertifiedExtremum:
    """Certified minimum of p/q on the box: true min >= certified_bound."""
    return _grid_extremum(p, q, box, eps, "min", denominator_min_sq_lower, jobs)


def grid_absmax(p, q, box, eps, denominator_min_sq_lower=1, jobs: int = 1) -> CertifiedExtremum:
    """Certified sup of |p/q| on the box: true sup <= certified_bound."""
    return _grid_extremum(p, q, box, eps, "absmax", denominator_min_sq_lower, jobs)


def grid_absmin(p, q, box, eps, denominator_min_sq_lower=1, jobs: int = 1) -> CertifiedExtremum:
    """Certified min of |p/q| on the box: true min >= certified_bound."""
    return _grid_extremum(p, q, box, eps, "absmin", denominator_min_sq_lower, jobs)
