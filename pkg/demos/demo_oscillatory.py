"""Oscillatory integrals by exact boundary sums.

For a monotone phase g and any polynomial weight p, the integral of
e^{ig} f is the endpoint expression e^{ig(a)} S_p(g(a)) - e^{ig(b)} S_p(g(b))
up to an L^1 defect ||f - (p o g) g'||.  The endpoint expression only needs
exact polynomial derivatives and certified e^{ix} rectangles, so violently
oscillatory integrals come out with rigorous bounds and no quadrature.
"""

from gmpy2 import mpq

from nlsverify.oscillate import boundary_sum
from nlsverify.poly import MonoPoly1


def main():
    # int_0^b e^{ix} dx, where p = 1 makes the estimator exact
    b = mpq(2)
    bs = boundary_sum(MonoPoly1([1]), 0, b)
    print(f"int_0^2 e^(ix) dx is enclosed by:")
    print(f"  re in [{float(bs.value.re.lo):.18f}, {float(bs.value.re.hi):.18f}]")
    print(f"  im in [{float(bs.value.im.lo):.18f}, {float(bs.value.im.hi):.18f}]")
    print("  (compare sin 2 = 0.909297426825681..., 1 - cos 2 = 1.416146836547142...)")

    # a phase sweeping ~150 radians: the estimator does not care
    p = MonoPoly1([0, mpq(1, 100), mpq(-1, 5000)])
    g_a, g_b = mpq(-160), mpq(-12)
    bs = boundary_sum(p, g_a, g_b)
    print(f"\nwith a quadratic weight and a phase running {g_a} -> {g_b}:")
    print(f"  re in [{float(bs.value.re.lo):.18e}, {float(bs.value.re.hi):.18e}]")
    print(f"  enclosure width {float(bs.value.re.width):.1e} "
          "(set by the e^{ix} rectangles, default 1e-20 tails)")

    print("\nthe real pipeline feeds the same estimator degree-40 weights and")
    print("certifies the L^1 defect through a T-norm of an exact degree-1780")
    print("difference polynomial; see the oscillatory-window task.")


if __name__ == "__main__":
    main()
