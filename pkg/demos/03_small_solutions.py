"""Small nonzero integer solutions of underdetermined homogeneous
systems: the constructive engine behind auxiliary polynomials.

The solver certifies the size bound max|x_i| < (N*A)^(M/(N-M)) by pure
integer comparisons, over Z and over Q(alpha) via power-basis expansion.
"""

import random
from fractions import Fraction

from dioph import (
    AlgebraicNumber,
    IntMatrix,
    IntPolynomial,
    NFMatrix,
    NumberFieldElement,
    satisfies_size_bound,
    siegel_solve_NF,
    siegel_solve_Z,
)

print("== a single equation x + 2y = 0 ==")
A = IntMatrix([[1, 2]])
x = siegel_solve_Z(A)
print(f"  solution {x}, bound (2*2)^1 = 4, max|x_i| = {max(abs(v) for v in x)}")

print("\n== random underdetermined systems ==")
rng = random.Random(7)
for _ in range(5):
    m = rng.randint(1, 3)
    n = rng.randint(m + 2, 8)
    entries = [[rng.randint(-10, 10) for _ in range(n)] for _ in range(m)]
    matrix = IntMatrix(entries)
    x = siegel_solve_Z(matrix)
    ok = satisfies_size_bound(x, n, m, matrix.max_abs())
    print(f"  {m}x{n}, A={matrix.max_abs():2d}: x = {x}  in-bound: {ok}")

print("\n== a system over Q(sqrt 2) ==")
sqrt2 = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(1, 2))
a = NumberFieldElement.generator(sqrt2)
system = NFMatrix(sqrt2, [[1 + a, 1, 0, 0, 0], [a, 0, 1, -1, a]])
res = siegel_solve_NF(system)
print(f"  x = {res.x}")
print(f"  H(x) = {res.height}, log H(x) ~ {float(res.log_height.mid):.4f}")
print(f"  c1 (inverse-embedding bound) ~ {float(res.c1.mid):.6f}")
print(f"  c(K) = log c1 ~ {float(res.cK.mid):.6f}")
print(f"  certified size bound on log H: {float(res.certified_bound.hi):.4f}")
print(f"  paper-shaped bound dM/(N-dM)(h(B)+log N+c(K)): {float(res.nominal_bound.hi):.4f}")
