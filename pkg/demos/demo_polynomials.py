"""The three polynomial representations and the exact T-norm.

Monomial form for calculus, Lagrange form for data given by values, and
Chebyshev form for the T-norm: the l^1 norm of Chebyshev coefficients,
which dominates the sup-norm and is exactly computable over the rationals.
"""

from gmpy2 import mpq

from nlsverify.poly import (
    LagPoly1,
    MonoPoly1,
    cheb_mul,
    lagrange_to_mono,
    mono_to_cheb,
)
from nlsverify.tnorm import tnorm1


def main():
    p = MonoPoly1([0, 0, 0, 1])  # x^3
    c = mono_to_cheb(p, (-1, 1))
    print(f"x^3 on [-1,1] in the Chebyshev basis: {[str(v) for v in c.coeffs]}")
    print(f"round trip back to monomials: {[str(v) for v in c.to_mono().coeffs]}")

    lag = LagPoly1([0, 1], [1, 3])
    print(f"\ninterpolant through (0,1), (1,3): coefficients {[str(v) for v in lagrange_to_mono(lag).coeffs]}")

    t1 = mono_to_cheb(MonoPoly1([0, 1]), (-1, 1))
    prod = cheb_mul(t1, t1)
    print(f"\nT_1 * T_1 expands to {[str(v) for v in prod.coeffs]}  (=T_0/2 + T_2/2)")

    q = MonoPoly1([-1, 0, 1])  # x^2 - 1
    print(f"\nT-norm of x^2 - 1 on [-1,1]: {tnorm1(q, (-1, 1))}")
    print("sup-norm domination on a few points:")
    n = tnorm1(q, (-1, 1))
    for x in (mpq(-1), mpq(-1, 3), mpq(2, 5), mpq(9, 10)):
        print(f"  |p({str(x):>5})| = {str(abs(q(x))):>6}  <=  {n}")

    big = MonoPoly1([mpq(k % 7 - 3, k + 1) for k in range(61)])
    rt = mono_to_cheb(big, (mpq(-3, 7), mpq(22, 9))).to_mono() == big
    print(f"\ndegree-60 round trip on a ragged rational domain is exact: {rt}")


if __name__ == "__main__":
    main()
