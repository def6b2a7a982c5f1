"""Constructing an auxiliary polynomial that vanishes to high weighted
order at (alpha, ..., alpha), with its certificates, and verifying
index-bound instances.
"""

from fractions import Fraction

from dioph import (
    AlgebraicNumber,
    IndexSetSpec,
    IntPolynomial,
    MultiPoly,
    build_aux_poly,
    count_index_set,
    derivative_height_bound_check,
    roth_lemma_verify,
    verify_aux_poly,
)

sqrt2 = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(1, 2))

print("== how many low-weight derivative constraints are there? ==")
for m, eps, r in [(2, Fraction(1, 2), (2, 2)), (2, Fraction(1, 2), (3, 3)), (4, Fraction(1, 4), (3, 3, 3, 3))]:
    spec = IndexSetSpec(m, eps, r)
    count, bound = count_index_set(spec)
    print(f"  m={m}, eps={eps}, r={r}: count {count} <= analytic bound {float(bound.hi):.3f}")

print("\n== the construction for alpha = sqrt(2), m = 2, r = (3,3), eps = 1/2 ==")
res = build_aux_poly(sqrt2, 2, Fraction(1, 2), (3, 3))
print(f"  P = {res.poly}")
print(f"  index at (sqrt2, sqrt2) >= {res.index_lower.value} (threshold 1/2)")
print(f"  H(P) = {res.height.exact}")
print(f"  system: {res.constraints} rational constraints in {res.unknowns} unknowns")
print(f"  h(P)/(r1+r2) ~ {float(res.height_ratio.mid):.4f}")

print("\n== an independently proposed witness passes the same verifier ==")
x = MultiPoly.variable(2, 0)
y = MultiPoly.variable(2, 1)
report = verify_aux_poly((x - y) ** 2, sqrt2, 2, Fraction(1, 2), (3, 3))
print(f"  (x1 - x2)^2: ok={report['ok']}, index {report['index'].value}")

print("\n== the evaluated-derivative height bound ==")
P = (x - 1) ** 3 * y + 7 * x
rep = derivative_height_bound_check(P, [Fraction(22, 7), Fraction(-3, 2)], (1, 0), (4, 1))
print(f"  H(d_J P(beta)) = {rep.lhs.lo} <= {rep.rhs.lo} : {rep.holds}")

print("\n== verifying the index bound on an explicit instance ==")
beta = Fraction(2 ** 64)
P1 = MultiPoly.from_univariate([-beta, 1])
rep = roth_lemma_verify(P1, [beta], (10,), Fraction(1, 2))
print(f"  hypotheses hold: {rep.hypotheses_hold}")
print(f"  Ind = {rep.index.value} <= 2 m eta = {rep.index_bound}: {rep.conclusion_holds}")
