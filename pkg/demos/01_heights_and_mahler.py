"""Heights of rationals, points, and polynomials; Mahler measure as the
bridge to heights of algebraic numbers.

Every printed quantity is either an exact rational or a certified
enclosure [lo, hi] that provably contains the true value.
"""

from fractions import Fraction

from dioph import (
    AlgebraicNumber,
    IntPolynomial,
    Place,
    height_polynomial,
    height_projective,
    height_rational,
    local_abs,
    local_abs_product,
    mahler_measure,
    support_places,
    weil_height_algebraic,
)

print("== natural heights of rationals ==")
for q in (Fraction(3, 2), Fraction(7), Fraction(-22, 7)):
    print(f"  H({q}) = {height_rational(q).exact}")

print("\n== projective points are height-invariant under scaling ==")
print("  H(1 : 3/2)  =", height_projective([1, Fraction(3, 2)]).exact)
print("  H(2 : 4: 6) =", height_projective([2, 4, 6]).exact)

print("\n== polynomial heights (primitive integer form) ==")
print("  H(x^2 - 2)    =", height_polynomial(IntPolynomial([-2, 0, 1])).exact)
print("  H((1/3)x + 2) =", height_polynomial([Fraction(2), Fraction(1, 3)]).exact)

print("\n== the product formula, exactly ==")
q = Fraction(-840, 187)
places = support_places(q)
print(f"  q = {q}; support places: {[str(v) for v in places]}")
for v in places:
    print(f"    |q|_{v} = {local_abs(q, v)}")
print("  product over all of them:", local_abs_product(q, places))

print("\n== Mahler measures ==")
golden = IntPolynomial([-1, -1, 1])
m = mahler_measure(golden)
print(f"  M(x^2 - x - 1) in [{float(m.lo):.12f}, {float(m.hi):.12f}]  (phi)")
m2 = mahler_measure(IntPolynomial([-2, 0, 0, 1]))
print(f"  M(x^3 - 2) contains 2: {m2.contains(2)}")
m3 = mahler_measure(IntPolynomial([5, -6, 5]))
print(f"  M(5x^2 - 6x + 5) contains 5: {m3.contains(5)} (both roots on the unit circle)")

print("\n== Weil heights via M(f)^(1/deg) ==")
for n in (2, 3, 5, 10):
    alpha = AlgebraicNumber(IntPolynomial([-2] + [0] * (n - 1) + [1]), interval=(1, 2))
    h = weil_height_algebraic(alpha, Fraction(1, 10 ** 12)).enclosure
    print(f"  H(2^(1/{n})) ~ {float(h.mid):.12f}   (true value 2^(1/{n}) = {2 ** (1 / n):.12f})")
