"""Successive minima of rational convex bodies and the two-sided
Minkowski inequality, all in exact rational arithmetic.
"""

import random
from fractions import Fraction

from dioph import ConvexBody, body_volume, minkowski_check, successive_minima

print("== axis boxes: the upper bound is attained exactly ==")
body = ConvexBody([[1, 0], [0, 1]], [Fraction(1, 2), 3])
res = successive_minima(body)
print(f"  bounds (1/2, 3): volume {body_volume(body)}")
print(f"  minima {res.lambdas} with witnesses {res.witnesses}")
rep = minkowski_check(body)
print(f"  product lambda1*lambda2*vol = {rep.product} (upper bound 4, lower 2)")

print("\n== a sheared body: volume is unimodular-invariant ==")
sheared = ConvexBody([[1, 1], [0, 1]], [1, 1])
print(f"  volume {body_volume(sheared)}, minima {successive_minima(sheared).lambdas}")

print("\n== random bodies always satisfy 2^N/N! <= product <= 2^N ==")
rng = random.Random(3)
for _ in range(6):
    n = rng.randint(2, 4)
    forms = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3):
        i, j = rng.sample(range(n), 2)
        coef = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            forms[i][k] += coef * forms[j][k]
    bounds = [Fraction(rng.randint(1, 3), rng.randint(1, 3)) for _ in range(n)]
    rep = minkowski_check(ConvexBody(forms, bounds))
    print(
        f"  N={n}: lambdas {tuple(str(l) for l in rep.lambdas)}, "
        f"product {rep.product} (upper {2 ** n}), "
        f"bounds hold: {rep.upper_ok and rep.lower_ok}"
    )
