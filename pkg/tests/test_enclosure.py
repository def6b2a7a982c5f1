import math
import random
from fractions import Fraction

import pytest

from dioph.enclosure import (
    Enclosure,
    exp_enclosure,
    iroot,
    log2_enclosure,
    log_enclosure,
    nth_root_enclosure,
    pow_enclosure,
    sqrt_enclosure,
)
from dioph.exceptions import DomainError


def test_iroot_exact():
    rng = random.Random(1)
    for _ in range(500):
        n = rng.randrange(0, 10 ** 12)
        k = rng.randrange(1, 7)
        r = iroot(n, k)
        assert r ** k <= n < (r + 1) ** k


def test_nth_root_enclosure_contains_and_width():
    rng = random.Random(2)
    for _ in range(100):
        q = Fraction(rng.randrange(1, 10 ** 6), rng.randrange(1, 10 ** 4))
        k = rng.randrange(1, 6)
        err = Fraction(1, 10 ** 9)
        enc = nth_root_enclosure(q, k, err)
        assert enc.width <= err
        # containment checked exactly via k-th powers
        assert enc.lo ** k <= q <= enc.hi ** k


def test_sqrt_zero():
    assert sqrt_enclosure(0, Fraction(1, 10)) == Enclosure.exact(0)


def test_log_enclosure_consistency():
    rng = random.Random(3)
    for _ in range(60):
        q = Fraction(rng.randrange(1, 10 ** 8), rng.randrange(1, 10 ** 8))
        enc = log_enclosure(q, Fraction(1, 10 ** 12))
        assert enc.width <= Fraction(1, 10 ** 12)
        assert enc.lo <= Fraction(math.log(q)) + Fraction(1, 10 ** 9)
        assert enc.hi >= Fraction(math.log(q)) - Fraction(1, 10 ** 9)
        # exact two-sided consistency: exp(lo) <= q <= exp(hi)
        assert exp_enclosure(enc.lo, Fraction(1, 10 ** 15)).lo <= q
        assert exp_enclosure(enc.hi, Fraction(1, 10 ** 15)).hi >= q


def test_log_one_is_exact_zero():
    assert log_enclosure(Fraction(1), Fraction(1, 10)) == Enclosure.exact(0)


def test_log2_cached_value():
    enc = log2_enclosure(Fraction(1, 10 ** 20))
    assert enc.width <= Fraction(1, 10 ** 20)
    assert exp_enclosure(enc.lo, Fraction(1, 10 ** 25)).lo <= 2
    assert exp_enclosure(enc.hi, Fraction(1, 10 ** 25)).hi >= 2
    assert abs(float(enc.mid) - math.log(2)) < 1e-12


def test_exp_enclosure():
    for t in (Fraction(-1, 32), Fraction(0), Fraction(7, 2), Fraction(-5)):
        enc = exp_enclosure(t, Fraction(1, 10 ** 10))
        assert enc.width <= Fraction(1, 10 ** 10)
        assert enc.lo <= Fraction(math.exp(t)) + Fraction(1, 10 ** 6)
        assert enc.hi >= Fraction(math.exp(t)) - Fraction(1, 10 ** 6)


def test_interval_multiplication_signs():
    a = Enclosure(-2, 3)
    b = Enclosure(-5, -1)
    prod = a * b
    assert prod.lo == -15 and prod.hi == 10


def test_reciprocal_requires_sign():
    with pytest.raises(DomainError):
        Enclosure(-1, 1).reciprocal()
    assert Enclosure(2, 4).reciprocal() == Enclosure(Fraction(1, 4), Fraction(1, 2))


def test_pow_and_abs():
    cube = Enclosure(-2, 1) ** 3
    assert cube.lo <= -8 and cube.hi >= 1  # sound if wider than the true range
    assert (Enclosure(2, 3) ** 2) == Enclosure(4, 9)
    assert abs(Enclosure(-3, 1)) == Enclosure(0, 3)


def test_pow_enclosure_rational_exponent():
    base = Enclosure(Fraction(2), Fraction(2))
    enc = pow_enclosure(base, 1, 3, Fraction(1, 10 ** 12))
    assert enc.lo ** 3 <= 2 <= enc.hi ** 3


def test_round_out_is_outward():
    e = Enclosure(Fraction(1, 3), Fraction(2, 3))
    r = e.round_out(16)
    assert r.lo <= e.lo and r.hi >= e.hi
    assert r.lo.denominator <= 2 ** 16 and r.hi.denominator <= 2 ** 16
