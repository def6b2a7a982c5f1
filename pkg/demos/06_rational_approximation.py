"""How well can rationals approximate algebraic numbers?  Continued
fractions, the explicit Liouville barrier, and approximation exponents.
"""

from fractions import Fraction

from dioph import (
    AlgebraicNumber,
    IntPolynomial,
    continued_fraction,
    exponent_report,
    liouville_constant,
    liouville_scan,
)

sqrt2 = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(1, 2))
phi = AlgebraicNumber(IntPolynomial([-1, -1, 1]), interval=(1, 2))
cbrt2 = AlgebraicNumber(IntPolynomial([-2, 0, 0, 1]), interval=(1, 2))

print("== continued fractions, exactly (no floating point) ==")
for name, alpha in [("sqrt2", sqrt2), ("phi", phi), ("2^(1/3)", cbrt2)]:
    cf = continued_fraction(alpha, 8)
    print(f"  {name}: quotients {cf.partial_quotients}")
    print(f"        convergents {cf.convergents[:5]} ...")

print("\n== each convergent beats 1/q^2 (verified on construction) ==")
cf = continued_fraction(sqrt2, 6)
print("  sqrt2 convergents:", cf.convergents)

print("\n== the Liouville barrier c(alpha)/q^n ==")
for name, alpha in [("sqrt2", sqrt2), ("phi", phi), ("2^(1/3)", cbrt2)]:
    c = liouville_constant(alpha)
    print(f"  c({name}) ~ {float(c.mid):.10f}")

print("\n== scanning for violations (there are provably none) ==")
for name, alpha in [("sqrt2", sqrt2), ("phi", phi)]:
    violations = liouville_scan(alpha, 10 ** 4, sweep_limit=500)
    print(f"  {name}, q <= 10^4 plus full sweep q <= 500: {len(violations)} violations")

print("\n== approximation exponents approach 2 from above ==")
records, summary = exponent_report(sqrt2, 10 ** 4)
print("  sqrt2: q, kappa (enclosure midpoints):")
for r in records:
    if r.kappa is not None:
        print(f"    q = {r.q:6d}   kappa ~ {float(r.kappa.mid):.6f}")
print(f"  max kappa over the range: {float(summary.max_exponent.hi):.6f}")

records, summary = exponent_report(phi, 10 ** 5)
print(f"\n  phi: Hurwitz tail minimum of q^2|phi - p/q| ~ "
      f"{float(summary.hurwitz_liminf.mid):.9f} (limit 1/sqrt5 = {5 ** -0.5:.9f})")
