"""Finiteness made concrete: enumerate every algebraic number of bounded
degree and bounded Weil height, and watch the height-1 stratum collapse
onto roots of unity.
"""

from fractions import Fraction

from dioph import (
    AlgebraicNumber,
    is_root_of_unity,
    mahler_measure,
    northcott_enumerate,
)
from dioph.intpoly import isolate_real_roots

print("== degree <= 2, height <= 1: only 0 and roots of unity survive ==")
for f in northcott_enumerate(2, Fraction(1)):
    if f.degree == 1 and f.constant == 0:
        print(f"  {f}   (the number 0)")
        continue
    if isolate_real_roots(f):
        alpha = AlgebraicNumber(f, interval=isolate_real_roots(f)[0])
    else:
        alpha = AlgebraicNumber(f, conjugate_index=0)
    flag, order = is_root_of_unity(alpha)
    print(f"  {f}   root of unity: {flag}" + (f", order {order}" if flag else ""))

print("\n== degree 1, height <= 2: the seven small rationals ==")
for f in northcott_enumerate(1, Fraction(2)):
    root = Fraction(-f.constant, f.leading)
    print(f"  {f}   (root {root})")

print("\n== degree <= 2, height <= 3/2, with Mahler measures ==")
for f in northcott_enumerate(2, Fraction(3, 2)):
    enc = mahler_measure(f, Fraction(1, 10 ** 10))
    print(f"  {str(f):22s} M in [{float(enc.lo):.10f}, {float(enc.hi):.10f}]")
