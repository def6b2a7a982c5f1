import random
from fractions import Fraction
from math import factorial

import pytest

from dioph.exceptions import DomainError
from dioph.lattice import (
    ConvexBody,
    body_volume,
    minkowski_check,
    successive_minima,
    _rank_int,
)


def unimodular(rng, n, shears=3):
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n == 1:
        return M
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            M[i][k] += c * M[j][k]
    return M


def rand_body(rng, n):
    forms = unimodular(rng, n)
    # occasionally leave the unimodular world (dets != 1 probe products
    # strictly below 2^N)
    if rng.random() < 0.5:
        i = rng.randrange(n)
        s = rng.choice([2, 3, Fraction(1, 2), Fraction(3, 2)])
        forms[i] = [s * a for a in forms[i]]
    if n >= 2 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        forms[i] = [a + b for a, b in zip(forms[i], forms[j])]
        if rng.random() < 0.5:
            forms[i] = [2 * a for a in forms[i]]
    bounds = [
        Fraction(rng.randint(1, 3), rng.randint(1, 3)) for _ in range(n)
    ]
    try:
        return ConvexBody(forms, bounds)
    except Exception:
        return ConvexBody(unimodular(rng, n), bounds)


def test_volume_examples():
    assert body_volume(ConvexBody([[1, 0], [0, 1]], [1, 1])) == 4
    assert body_volume(ConvexBody([[1, 0], [0, 1]], [Fraction(1, 2), 3])) == 6
    assert body_volume(ConvexBody([[1, 1], [0, 1]], [1, 1])) == 4


def test_body_validation():
    with pytest.raises(DomainError):
        ConvexBody([[1, 1], [2, 2]], [1, 1])
    with pytest.raises(DomainError):
        ConvexBody([[1, 0], [0, 1]], [1, 0])


def test_minima_examples():
    res = successive_minima(ConvexBody([[1, 0], [0, 1]], [1, 1]))
    assert res.lambdas == (1, 1)

    res2 = successive_minima(ConvexBody([[1, 0], [0, 1]], [Fraction(1, 2), 3]))
    assert res2.lambdas == (Fraction(1, 3), 2)
    assert res2.witnesses[0] == (0, 1)

    res3 = successive_minima(
        ConvexBody([[1, 0], [0, 1]], [Fraction(1, 5), Fraction(1, 5)])
    )
    assert res3.lambdas == (5, 5)


def test_minima_witness_membership():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(1, 3)
        body = rand_body(rng, n)
        res = successive_minima(body)
        assert list(res.lambdas) == sorted(res.lambdas)
        assert _rank_int(res.witnesses) == n
        for lam, w in zip(res.lambdas, res.witnesses):
            assert body.gauge(w) == lam


def test_minkowski_examples():
    rep = minkowski_check(ConvexBody([[1, 0], [0, 1]], [1, 1]))
    assert rep.product == 4 and rep.upper_ok and rep.lower_ok

    rep2 = minkowski_check(ConvexBody([[1, 0], [0, 1]], [Fraction(1, 2), 3]))
    assert rep2.product == 4 and rep2.upper_ok and rep2.lower_ok


def test_identity_boxes_attain_upper_bound():
    rng = random.Random(102)
    for _ in range(20):
        n = rng.randint(1, 4)
        bounds = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(n)]
        forms = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        rep = minkowski_check(ConvexBody(forms, bounds))
        assert rep.product == Fraction(2) ** n  # equality for axis boxes


def test_minkowski_random_bodies():
    rng = random.Random(103)
    for _ in range(60):
        n = rng.randint(1, 4)
        rep = minkowski_check(rand_body(rng, n))
        assert rep.lower_ok and rep.upper_ok
        assert Fraction(2) ** n / factorial(n) <= rep.product <= Fraction(2) ** n


def test_scaling_law():
    rng = random.Random(104)
    for _ in range(25):
        n = rng.randint(1, 3)
        body = rand_body(rng, n)
        res = successive_minima(body)
        s = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        scaled = ConvexBody(body.forms, [s * c for c in body.bounds])
        res2 = successive_minima(scaled)
        # bounds scaled by s: every minimum scales by 1/s
        assert tuple(l * s for l in res2.lambdas) == res.lambdas
        assert body_volume(scaled) == body_volume(body) * s ** n
        p1 = body_volume(body)
        for l in res.lambdas:
            p1 *= l
        p2 = body_volume(scaled)
        for l in res2.lambdas:
            p2 *= l
        assert p1 == p2


def test_unimodular_invariance():
    rng = random.Random(105)
    for _ in range(100):
        n = rng.randint(1, 3)
        body = rand_body(rng, n)
        U = unimodular(rng, n)
        composed = ConvexBody(
            [
                [
                    sum(body.forms[i][k] * U[k][j] for k in range(n))
                    for j in range(n)
                ]
                for i in range(n)
            ],
            body.bounds,
        )
        assert successive_minima(composed).lambdas == successive_minima(body).lambdas
