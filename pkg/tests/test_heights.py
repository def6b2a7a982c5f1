import math
import random
from fractions import Fraction
from itertools import product as iter_product

import pytest

from dioph.exceptions import DomainError
from dioph.heights import (
    Place,
    height_affine_point,
    height_polynomial,
    height_projective,
    height_rational,
    is_product_of_cyclotomics,
    is_root_of_unity,
    local_abs,
    local_abs_product,
    mahler_leq,
    mahler_measure,
    nf_element_height,
    northcott_enumerate,
    support_places,
    sum_log_abs_over_S,
    weil_height_algebraic,
)
from dioph.intpoly import IntPolynomial, content_and_primitive, is_irreducible
from dioph.multipoly import MultiPoly, normalized_derivative
from dioph.numberfield import AlgebraicNumber, NumberFieldElement, power_min_poly

SQRT2 = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(1, 2))
PHI = AlgebraicNumber(IntPolynomial([-1, -1, 1]), interval=(1, 2))


def rand_rational(rng, top=10 ** 6):
    n = rng.randint(-top, top)
    d = rng.randint(1, top)
    if n == 0:
        n = 1
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# exact heights


def test_height_rational_examples():
    assert height_rational(Fraction(3, 2)).exact == 3
    assert height_rational(7).exact == 7
    assert height_rational(Fraction(-22, 7)).exact == 22
    assert height_rational(0).exact == 1


def test_height_projective_examples():
    assert height_projective([1, Fraction(3, 2)]).exact == 3
    assert height_projective([2, 4, 6]).exact == 3
    assert height_projective([0, 5]).exact == 1
    with pytest.raises(DomainError):
        height_projective([0, 0])


def test_height_projective_scaling_invariance():
    rng = random.Random(41)
    for _ in range(200):
        coords = [rand_rational(rng, 100) for _ in range(3)]
        scale = rand_rational(rng, 50)
        h1 = height_projective(coords).exact
        h2 = height_projective([scale * c for c in coords]).exact
        assert h1 == h2


def test_height_polynomial_examples():
    assert height_polynomial(IntPolynomial([-2, 0, 1])).exact == 2
    assert height_polynomial([Fraction(2), Fraction(1, 3)]).exact == 6
    assert height_polynomial(IntPolynomial([6, 13, 6])).exact == 13


# ---------------------------------------------------------------------------
# places and the product formula


def test_local_abs_examples():
    assert local_abs(Fraction(12), Place.finite(2)) == Fraction(1, 4)
    assert local_abs(Fraction(12), Place.finite(3)) == Fraction(1, 3)
    assert local_abs(Fraction(5, 7), Place.finite(7)) == 7
    assert local_abs(Fraction(-5, 7), Place.archimedean()) == Fraction(5, 7)


def test_product_formula_exact():
    rng = random.Random(42)
    for _ in range(1000):
        q = rand_rational(rng)
        assert local_abs_product(q, support_places(q)) == 1


def test_sum_log_abs_examples():
    assert local_abs_product(Fraction(12), [Place.finite(2), Place.finite(3)]) == (
        Fraction(1, 12)
    )
    assert local_abs_product(Fraction(12), [Place.archimedean()]) == 12
    assert local_abs_product(
        Fraction(5, 7), [Place.finite(7), Place.archimedean()]
    ) == 5
    enc = sum_log_abs_over_S(Fraction(12), [Place.finite(2), Place.finite(3)])
    assert enc.hi < 0  # equals -log 12


def test_fundamental_inequality_exact():
    rng = random.Random(43)
    extra = [2, 3, 5, 7, 11, 13]
    for _ in range(400):
        q = rand_rational(rng, 10 ** 4)
        h = height_rational(q).exact
        places = support_places(q)
        k = rng.randint(0, len(places))
        subset = rng.sample(places, k) + [
            Place.finite(p) for p in rng.sample(extra, rng.randint(0, 3))
        ]
        prod = local_abs_product(q, subset)
        assert Fraction(1, h) <= prod <= h


# ---------------------------------------------------------------------------
# Mahler measure and algebraic heights


def test_mahler_examples():
    enc = mahler_measure(IntPolynomial([-1, -1, 1]))
    assert enc.lo ** 2 - enc.lo - 1 <= 0 <= enc.hi ** 2 - enc.hi - 1
    assert mahler_measure(IntPolynomial([-2, 0, 0, 1])).contains(2)
    assert mahler_measure(IntPolynomial([5, -6, 5])).contains(5)


def test_mahler_content_scales():
    enc = mahler_measure(IntPolynomial([-4, 0, 0, 2]))  # 2(x^3 - 2)
    assert enc.contains(4)


def test_weil_height_examples():
    h = weil_height_algebraic(
        AlgebraicNumber(IntPolynomial([-2, 0, 0, 1]), interval=(1, 2))
    )
    assert h.enclosure.lo ** 3 <= 2 <= h.enclosure.hi ** 3
    h2 = weil_height_algebraic(PHI)
    # H(phi)^2 = phi: check exactly through the quadratic
    lo, hi = h2.enclosure.lo, h2.enclosure.hi
    assert (lo ** 2) ** 2 - lo ** 2 - 1 <= 0 <= (hi ** 2) ** 2 - hi ** 2 - 1
    assert weil_height_algebraic(AlgebraicNumber.from_rational(5)).exact == 5


def test_height_power_identity_rational():
    rng = random.Random(44)
    for _ in range(300):
        q = rand_rational(rng, 100)
        h = height_rational(q).exact
        for m in range(-5, 6):
            if q == 0 and m <= 0:
                continue
            assert height_rational(q ** m).exact == h ** abs(m)


def test_height_power_identity_algebraic():
    prec = Fraction(1, 10 ** 9)
    for alpha in (SQRT2, PHI, AlgebraicNumber(IntPolynomial([-2, 0, 0, 1]), interval=(1, 2))):
        h1 = weil_height_algebraic(alpha, prec).enclosure
        for m in (1, 2, 3):
            pm = power_min_poly(alpha, m)
            am = AlgebraicNumber(
                pm, conjugate_index=0
            ) if not _has_real_root(pm) else AlgebraicNumber(pm, interval=_real_iv(pm))
            hm = weil_height_algebraic(am, prec).enclosure
            powered = h1 ** m
            assert hm.lo <= powered.hi and powered.lo <= hm.hi  # overlap


def _has_real_root(poly):
    from dioph.intpoly import isolate_real_roots

    return bool(isolate_real_roots(poly))


def _real_iv(poly):
    from dioph.intpoly import isolate_real_roots

    return isolate_real_roots(poly)[-1]


def test_height_inverse_identity():
    rng = random.Random(45)
    for _ in range(200):
        q = rand_rational(rng, 1000)
        assert height_rational(q).exact == height_rational(1 / q).exact
    # reversed polynomial has the same Mahler measure
    f = IntPolynomial([-1, -1, 1])
    a = mahler_measure(f)
    b = mahler_measure(f.reversed_poly())
    assert a.lo <= b.hi and b.lo <= a.hi


def test_conjugate_invariance():
    a = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(1, 2))
    b = AlgebraicNumber(IntPolynomial([-2, 0, 1]), interval=(-2, -1))
    ha = weil_height_algebraic(a).enclosure
    hb = weil_height_algebraic(b).enclosure
    assert ha.lo == hb.lo and ha.hi == hb.hi  # same minimal polynomial


def test_product_and_sum_height_inequalities():
    rng = random.Random(46)
    for _ in range(1000):
        k = rng.randint(2, 4)
        qs = [rand_rational(rng, 1000) for _ in range(k)]
        hs = [height_rational(q).exact for q in qs]
        prod = Fraction(1)
        total = Fraction(0)
        for q in qs:
            prod *= q
            total += q
        bound = Fraction(1)
        for h in hs:
            bound *= h
        assert height_rational(prod).exact <= bound
        assert height_rational(total).exact <= bound * k


def test_point_sum_height_inequality():
    rng = random.Random(47)
    for _ in range(300):
        m = rng.randint(2, 4)
        pts = [
            [Fraction(rng.randint(-50, 50)) for _ in range(3)] for _ in range(m)
        ]
        total = [sum(p[j] for p in pts) for j in range(3)]
        h_sum = height_affine_point(total).exact
        bound = Fraction(m)
        for p in pts:
            bound *= height_affine_point(p).exact
        assert h_sum <= bound


def _rand_multipoly(rng, arity, deg, coeff=9, terms=5):
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, deg) for _ in range(arity))
        out[exps] = Fraction(rng.randint(-coeff, coeff))
    P = MultiPoly(arity, out)
    return P


def test_poly_product_height_inequality():
    rng = random.Random(48)
    for _ in range(300):
        arity = rng.randint(1, 3)
        r = rng.randint(2, 3)
        polys = []
        while len(polys) < r:
            P = _rand_multipoly(rng, arity, 3)
            if not P.is_zero():
                polys.append(P)
        prod = polys[0]
        for P in polys[1:]:
            prod = prod * P
        degs = [max(P.partial_degrees()[h] for P in polys) for h in range(arity)]
        bound = Fraction(2) ** (r * sum(degs))
        for P in polys:
            bound *= height_polynomial(P).exact
        assert height_polynomial(prod).exact <= bound


def test_disjoint_variable_product_height():
    rng = random.Random(49)
    for _ in range(100):
        f1 = _rand_multipoly(rng, 3, 3)
        g1 = _rand_multipoly(rng, 3, 3)
        if f1.is_zero() or g1.is_zero():
            continue
        f = MultiPoly(6, {e + (0, 0, 0): c for e, c in f1.terms.items()})
        g = MultiPoly(6, {(0, 0, 0) + e: c for e, c in g1.terms.items()})
        assert (
            height_polynomial(f * g).exact
            == height_polynomial(f).exact * height_polynomial(g).exact
        )


def test_derivative_height_inequality():
    rng = random.Random(50)
    for _ in range(200):
        arity = rng.randint(1, 3)
        P = _rand_multipoly(rng, arity, 4)
        if P.is_zero():
            continue
        I = tuple(rng.randint(0, 2) for _ in range(arity))
        D = normalized_derivative(P, I)
        if D.is_zero():
            continue
        bound = Fraction(2) ** sum(P.partial_degrees())
        assert height_polynomial(D).exact <= bound * height_polynomial(P).exact


# ---------------------------------------------------------------------------
# Northcott and Kronecker


def test_northcott_degree_one():
    polys = northcott_enumerate(1, Fraction(1))
    assert [list(p.coeffs) for p in polys] == [[-1, 1], [0, 1], [1, 1]]
    polys2 = northcott_enumerate(1, Fraction(2))
    assert len(polys2) == 7
    expected = {(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (-1, 2), (1, 2)}
    assert {p.coeffs for p in polys2} == expected


def test_northcott_degree_two_height_one():
    polys = northcott_enumerate(2, Fraction(1))
    quads = [p for p in polys if p.degree == 2]
    assert IntPolynomial([1, 0, 1]) in quads
    assert IntPolynomial([1, 1, 1]) in quads
    assert IntPolynomial([1, -1, 1]) in quads
    # Kronecker: every degree-2 entry with nonzero root is cyclotomic
    for p in quads:
        assert is_product_of_cyclotomics(p)


def test_northcott_against_brute_force():
    # independent scan with the coarser proven box |a_i| <= C(n,i) X^n
    target = northcott_enumerate(2, Fraction(2))
    xn = Fraction(4)
    found = set()
    for n in (1, 2):
        xpow = Fraction(2) ** n
        an_max = int(xpow)
        bounds = [int(math.comb(n, i) * xpow) for i in range(n)]
        for an in range(1, an_max + 1):
            for lower in iter_product(*(range(-b, b + 1) for b in bounds)):
                f = IntPolynomial(list(lower) + [an])
                if f.degree != n:
                    continue
                if content_and_primitive(f)[0] != 1:
                    continue
                if not is_irreducible(f):
                    continue
                if mahler_leq(f, xpow):
                    found.add(f.coeffs)
    assert found == {p.coeffs for p in target}


def test_northcott_boundary_case_included():
    # x^2 + x - 4 has both roots outside the unit circle, M = 4 exactly
    f = IntPolynomial([-4, 1, 1])
    assert mahler_leq(f, Fraction(4))
    assert not mahler_leq(f, Fraction(39999, 10000))
    assert f in northcott_enumerate(2, Fraction(2))


def test_exact_mahler_values():
    from dioph.heights import exact_mahler

    # complex pair on the unit circle: M = max(|lead|, |const|)
    assert exact_mahler(IntPolynomial([4, -7, 4])) == 4
    assert exact_mahler(IntPolynomial([2, 1, 2])) == 2
    # cyclotomic times a rational linear factor
    f = IntPolynomial([1, 1, 1]) * IntPolynomial([-3, 2])
    assert exact_mahler(f) == 3
    # golden ratio polynomial: irrational measure, no exact value
    assert exact_mahler(IntPolynomial([-1, -1, 1])) is None


def test_root_of_unity_examples():
    assert is_root_of_unity(
        AlgebraicNumber(IntPolynomial([1, 1, 1, 1, 1]), conjugate_index=0)
    ) == (True, 5)
    assert is_root_of_unity(PHI) == (False, None)
    assert is_root_of_unity(AlgebraicNumber.from_rational(-1)) == (True, 2)
    assert is_root_of_unity(AlgebraicNumber.from_rational(1)) == (True, 1)


def test_nf_element_height():
    gen = NumberFieldElement.generator(SQRT2)
    h = nf_element_height(gen)
    ref = weil_height_algebraic(SQRT2).enclosure
    assert h.enclosure.lo <= ref.hi and ref.lo <= h.enclosure.hi
    assert nf_element_height(NumberFieldElement.from_rational(SQRT2, Fraction(3, 2))).exact == 3
