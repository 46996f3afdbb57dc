"""The T-norm: the l^1 norm of a polynomial's Chebyshev expansion.

Since every T_n is bounded by 1 on [-1, 1], the T-norm on a rectangle
dominates the sup-norm there, and for rational data it is computable
exactly.  It is the workhorse estimate of the whole pipeline: wherever an
analytic bound needs a sup-norm, an exact T-norm stands in for it.

Only polynomials with real (rational) coefficients have a T-norm here;
complex polynomials are handled by callers through their real and imaginary
parts, combined either as a plain sum or inside a square-root-free
comparison of ||Re||^2 + ||Im||^2 against a squared cap.
"""

from __future__ import annotations

from gmpy2 import mpq

from .exact import GaussianRational
from .poly import ChebPoly1, MonoPoly1, MonoPoly2, _mono_coeffs_to_cheb


def _check_real(coeffs):
    for c in coeffs:
        if isinstance(c, GaussianRational):
            raise TypeError("T-norm is defined for real-coefficient polynomials; "
                            "take real/imaginary parts first")


def tnorm1(p, interval=None) -> mpq:
    """Exact T-norm of a univariate real polynomial on [a, b].

    ``p`` may be a MonoPoly1 (interval required) or a ChebPoly1 (its own
    domain is used unless a matching interval is passed).
    """
    if isinstance(p, ChebPoly1):
        if interval is not None and (mpq(interval[0]), mpq(interval[1])) != p.domain:
            p = ChebPoly1(_mono_coeffs_to_cheb(p.to_mono().coeffs, interval), interval)
        _check_real(p.coeffs)
        return sum((abs(c) for c in p.coeffs), mpq(0))
    if isinstance(p, MonoPoly1):
        if interval is None:
            raise ValueError("interval required for monomial input")
        _check_real(p.coeffs)
        cheb = _mono_coeffs_to_cheb(p.coeffs, interval)
        return sum((abs(c) for c in cheb), mpq(0))
    raise TypeError("tnorm1 expects MonoPoly1 or ChebPoly1")


def cheb2_coeffs(p: MonoPoly2, box) -> list:
    """Tensor Chebyshev coefficient matrix of a real bivariate polynomial.

    The affine pullback and basis change are applied one axis at a time;
    each is the exact 1D conversion applied to coefficient vectors.
    """
    (a1, b1), (a2, b2) = box
    d1 = p.deg1
    if d1 < 0:
        return []
    d2 = max(p.deg2, 0)
    # rectangular matrix m[j][k], j = y-power, k = a-power
    m = [[p.rows[j][k] if k < len(p.rows[j]) else mpq(0) for k in range(d2 + 1)]
         for j in range(d1 + 1)]
    _check_real([c for row in m for c in row])
    # convert along the first axis: each fixed k-column is a y-polynomial
    cols = []
    for k in range(d2 + 1):
        col = _mono_coeffs_to_cheb([m[j][k] for j in range(d1 + 1)], (a1, b1))
        cols.append(col + [mpq(0)] * (d1 + 1 - len(col)))
    # convert along the second axis: each fixed j-row is an a-polynomial
    out = []
    for j in range(d1 + 1):
        row = _mono_coeffs_to_cheb([cols[k][j] for k in range(d2 + 1)], (a2, b2))
        out.append(row)
    return out


def tnorm2(p: MonoPoly2, box) -> mpq:
    """Exact T-norm of a real bivariate polynomial on a rational box."""
    return sum((abs(c) for row in cheb2_coeffs(p, box) for c in row), mpq(0))
