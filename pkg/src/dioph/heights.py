"""Places of Q, normalized absolute values, Weil and logarithmic heights,
Mahler measure, Northcott enumeration, and the Kronecker test.

Heights of rationals, points, and polynomials are exact; heights of
algebraic numbers of degree >= 2 are certified enclosures obtained from
root moduli.  The product formula over the support places of a rational
is an exact identity here, not a numerical one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import List, Optional, Sequence, Tuple

from .enclosure import Enclosure, log_enclosure, nth_root_enclosure
from .exceptions import DomainError, PrecisionError, UnsupportedError
from .intpoly import (
    IntPolynomial,
    content_and_primitive,
    cyclotomic,
    euler_phi,
    factor_integer,
    is_irreducible,
    poly_divide_exact,
    _q_to_primitive,
)
from .numberfield import AlgebraicNumber, NumberFieldElement
from .roots import root_moduli

NORTHCOTT_DEGREE_CAP = 12
DEFAULT_PRECISION = Fraction(1, 10 ** 12)


@dataclass(frozen=True)
class Place:
    """A place of Q: a prime p, or None for the archimedean place."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None:
            if self.prime < 2 or factor_integer(self.prime) != {self.prime: 1}:
                raise DomainError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(prime=p)

    @classmethod
    def archimedean(cls) -> "Place":
        return cls(prime=None)

    @property
    def is_finite(self) -> bool:
        return self.prime is not None

    def __str__(self):
        return str(self.prime) if self.is_finite else "inf"


class HeightValue:
    """A multiplicative height: exact rational when known, else an enclosure."""

    __slots__ = ("exact", "enclosure")

    def __init__(self, exact: Optional[Fraction], enclosure: Enclosure):
        if exact is not None and not enclosure.contains(exact):
            raise DomainError("exact height outside its enclosure")
        self.exact = exact
        self.enclosure = enclosure

    @classmethod
    def from_exact(cls, q) -> "HeightValue":
        q = Fraction(q)
        return cls(q, Enclosure.exact(q))

    @classmethod
    def from_enclosure(cls, enc: Enclosure) -> "HeightValue":
        return cls(None, enc)

    def log_enclosure(self, err: Fraction = DEFAULT_PRECISION) -> Enclosure:
        lo = log_enclosure(self.enclosure.lo, err / 2)
        hi = log_enclosure(self.enclosure.hi, err / 2)
        return Enclosure(lo.lo, hi.hi)

    def __repr__(self):
        if self.exact is not None:
            return f"HeightValue({self.exact})"
        return f"HeightValue(~{float(self.enclosure.mid)})"


# ---------------------------------------------------------------------------
# places and exact local absolute values


def ord_p(q: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if q == 0:
        raise DomainError("valuation of zero")
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def local_abs(q: Fraction, place: Place) -> Fraction:
    """Exact normalized absolute value |q|_v for nonzero rational q."""
    q = Fraction(q)
    if q == 0:
        raise DomainError("|0|_v is excluded; the product formula needs q != 0")
    if place.is_finite:
        return Fraction(place.prime) ** (-ord_p(q, place.prime))
    return abs(q)


def support_places(q: Fraction) -> List[Place]:
    """The places where |q|_v != 1, plus the archimedean place."""
    q = Fraction(q)
    if q == 0:
        raise DomainError("support of zero")
    primes = set(factor_integer(abs(q.numerator)) if abs(q.numerator) != 1 else {})
    primes |= set(factor_integer(q.denominator) if q.denominator != 1 else {})
    return [Place.finite(p) for p in sorted(primes)] + [Place.archimedean()]


def local_abs_product(q: Fraction, places: Sequence[Place]) -> Fraction:
    """Exact product of |q|_v over a finite set of places."""
    seen = set()
    result = Fraction(1)
    for v in places:
        if v in seen:
            continue
        seen.add(v)
        result *= local_abs(q, v)
    return result


def sum_log_abs_over_S(
    q: Fraction, places: Sequence[Place], err: Fraction = DEFAULT_PRECISION
) -> Enclosure:
    """Enclosure of sum over S of log|q|_v (the log of an exact rational)."""
    return log_enclosure(local_abs_product(q, places), err)


# ---------------------------------------------------------------------------
# exact heights of rationals, points, polynomials


def height_rational(q) -> HeightValue:
    """Natural height max(|num|, |den|); H(0) is defined as 1."""
    q = Fraction(q)
    if q == 0:
        return HeightValue.from_exact(1)
    return HeightValue.from_exact(max(abs(q.numerator), q.denominator))


def canonicalize_projective(coords: Sequence[Fraction]) -> Tuple[int, ...]:
    """Coprime integer coordinates with positive first nonzero entry."""
    coords = [Fraction(c) for c in coords]
    if all(c == 0 for c in coords):
        raise DomainError("projective point must have a nonzero coordinate")
    den = 1
    for c in coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    ints = [c // g for c in ints]
    for c in ints:
        if c != 0:
            if c < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


class ProjectivePoint:
    """A point of rational projective space in canonical coordinates
    (coprime integers, positive first nonzero entry)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[Fraction]):
        self.coords = canonicalize_projective(coords)

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def height(self) -> HeightValue:
        return HeightValue.from_exact(max(abs(c) for c in self.coords))


def height_projective(coords: Sequence[Fraction]) -> HeightValue:
    """Height of a projective point; scaling-invariant by canonicalization."""
    if isinstance(coords, ProjectivePoint):
        return coords.height()
    return ProjectivePoint(coords).height()


def height_affine_point(coords: Sequence[Fraction]) -> HeightValue:
    """Height of an affine point, via the embedding x -> (1 : x)."""
    return height_projective([Fraction(1)] + [Fraction(c) for c in coords])


def _primitive_int_coeffs(coeffs: Sequence[Fraction]) -> List[int]:
    prim = _q_to_primitive([Fraction(c) for c in coeffs])
    if prim.is_zero():
        raise DomainError("zero polynomial has no height")
    return list(prim.coeffs)


def height_polynomial(poly) -> HeightValue:
    """Height of a polynomial over Q (any arity): max |coefficient| of the
    primitive integer form.  Accepts IntPolynomial, a coefficient list,
    or a MultiPoly."""
    from .multipoly import MultiPoly

    if isinstance(poly, IntPolynomial):
        coeffs = poly.to_fractions()
    elif isinstance(poly, MultiPoly):
        if poly.is_zero():
            raise DomainError("zero polynomial has no height")
        coeffs = []
        for c in poly.terms.values():
            if isinstance(c, NumberFieldElement):
                raise UnsupportedError(
                    "polynomial heights are implemented for rational coefficients"
                )
            coeffs.append(Fraction(c))
    else:
        coeffs = [Fraction(c) for c in poly]
    ints = _primitive_int_coeffs(coeffs)
    return HeightValue.from_exact(max(abs(c) for c in ints))


# ---------------------------------------------------------------------------
# Mahler measure and Weil heights of algebraic numbers


def _clip_at_one(enc: Enclosure) -> Enclosure:
    return Enclosure(max(enc.lo, Fraction(1)), max(enc.hi, Fraction(1)))


def mahler_enclosure(f: IntPolynomial, precision: Fraction) -> Enclosure:
    """Enclosure of M(f) of width <= precision."""
    precision = Fraction(precision)
    if f.is_zero() or f.degree < 1:
        raise DomainError("Mahler measure needs degree >= 1")
    content, prim = content_and_primitive(f)
    n = prim.degree
    w = precision / (4 * n * max(1, abs(prim.leading)))
    for _ in range(60):
        acc = Enclosure.exact(abs(prim.leading))
        for m in root_moduli(prim, w):
            acc = acc * _clip_at_one(m)
        acc = acc * content
        if acc.width <= precision:
            return acc
        w /= 64
    raise PrecisionError(f"Mahler enclosure did not reach width {precision}")


def mahler_measure(f: IntPolynomial, precision: Fraction = DEFAULT_PRECISION) -> Enclosure:
    return mahler_enclosure(f, precision)


def is_product_of_cyclotomics(f: IntPolynomial) -> bool:
    """True iff f is +-(power of x) times a product of cyclotomics,
    equivalently M(primitive part) = 1 (Kronecker)."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    _, g = content_and_primitive(f)
    if g.leading < 0:
        g = -g
    k = 0
    while g.constant == 0 and g.degree > 0:
        g = IntPolynomial(g.coeffs[1:])
        k += 1
    changed = True
    while g.degree > 0 and changed:
        changed = False
        for kk in range(1, 2 * g.degree * g.degree + 3):
            if euler_phi(kk) > g.degree:
                continue
            q = poly_divide_exact(g, cyclotomic(kk))
            if q is not None:
                g = q
                changed = True
                break
    return g.degree == 0 and abs(g.constant) == 1


def _rational_roots(prim: IntPolynomial) -> List[Fraction]:
    """Rational roots of a primitive polynomial, with multiplicity 1 each
    per call site (the caller strips and repeats)."""
    from .intpoly import divisors
    import math as _math

    out = []
    if prim.constant == 0:
        out.append(Fraction(0))
        return out
    for q in divisors(prim.leading):
        for p in divisors(prim.constant):
            if _math.gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if prim(cand) == 0:
                    out.append(cand)
                    return out
    return out


def _strip_exact_factors(prim: IntPolynomial) -> Tuple[Fraction, IntPolynomial]:
    """Split off factors with exact Mahler contribution: rational linear
    factors (M = max(|p|, |q|)) and cyclotomic factors (M = 1).  Returns
    (exact contribution, remaining primitive cofactor)."""
    acc = Fraction(1)
    work = prim
    changed = True
    while changed and work.degree >= 1:
        changed = False
        roots = _rational_roots(work)
        if roots:
            r = roots[0]
            factor = IntPolynomial([-r.numerator, r.denominator])
            quotient = poly_divide_exact(work, factor)
            if quotient is None:
                raise DomainError("rational root stripping failed")
            acc *= max(abs(r.numerator), r.denominator)
            work = quotient
            changed = True
            continue
        for k in range(1, 2 * work.degree * work.degree + 3):
            if euler_phi(k) > work.degree:
                continue
            quotient = poly_divide_exact(work, cyclotomic(k))
            if quotient is not None:
                work = quotient
                changed = True
                break
    return acc, work


def exact_mahler(prim: IntPolynomial) -> Optional[Fraction]:
    """Exact Mahler measure of a primitive polynomial when structurally
    available: cyclotomic and rational linear factors are stripped
    exactly, and a residual quadratic with a complex pair has
    |root|^2 = |a_0/a_2| rational.  None when the value is irrational
    (only enclosures apply)."""
    acc, work = _strip_exact_factors(prim)
    if work.degree == 0:
        return acc * abs(work.constant)
    if work.degree == 2:
        a0, a1, a2 = work.coeffs
        disc = a1 * a1 - 4 * a0 * a2
        if disc < 0:
            # complex pair of modulus sqrt(|a0/a2|)
            return acc * max(abs(a2), abs(a0))
    return None


def mahler_leq(f: IntPolynomial, c: Fraction) -> bool:
    """Decide M(f) <= c exactly (boundary inclusive), c rational.

    Exact structural values (cyclotomic products, rational factors,
    complex quadratic pairs, all roots certified outside or inside the
    unit circle) settle boundary ties; everything else is decided by
    enclosure tightening.  A residual undecidable tie raises
    PrecisionError rather than guessing.
    """
    c = Fraction(c)
    if f.is_zero() or f.degree < 1:
        raise DomainError("Mahler comparison needs degree >= 1")
    content, prim = content_and_primitive(f)
    target = c / content
    lead = abs(prim.leading)
    if lead > target:
        return False
    if prim.constant != 0 and abs(prim.constant) > target:
        return False  # M >= |a_0| always
    exact = exact_mahler(prim)
    if exact is not None:
        return exact <= target
    # strip the exactly-known factors; the enclosure ladder decides the rest
    exact_part, rest = _strip_exact_factors(prim)
    target = target / exact_part
    n = rest.degree
    w = Fraction(1, 10 ** 8)
    for _ in range(9):  # 1e-8 down to 1e-40 in 1e-4 steps, plus slack
        enc = mahler_enclosure(rest, w)
        if enc.hi <= target:
            return True
        if enc.lo > target:
            return False
        w /= 10 ** 4
    # structural tie-breaks at the finest precision
    moduli = root_moduli(rest, Fraction(1, 10 ** 40))
    outside = [m for m in moduli if m.lo > 1]
    inside = [m for m in moduli if m.hi < 1]
    if len(outside) == n:
        return Fraction(abs(rest.constant)) <= target  # M = |a_0|
    if len(inside) == n:
        return Fraction(abs(rest.leading)) <= target
    for extra in range(3):
        w_deep = Fraction(1, 10 ** (80 * 2 ** extra))
        enc = mahler_enclosure(rest, w_deep)
        if enc.hi <= target:
            return True
        if enc.lo > target:
            return False
    raise PrecisionError(
        f"cannot decide M({f}) <= {c} (suspected exact boundary tie)"
    )


def weil_height_algebraic(
    a: AlgebraicNumber, precision: Fraction = DEFAULT_PRECISION
) -> HeightValue:
    """Weil height H(a) = M(min poly)^(1/deg) as a certified enclosure."""
    precision = Fraction(precision)
    if a.is_rational():
        return height_rational(a.rational_value())
    n = a.degree
    w = precision
    for _ in range(60):
        m_enc = mahler_enclosure(a.min_poly, w)
        lo = nth_root_enclosure(m_enc.lo, n, precision / 4).lo
        hi = nth_root_enclosure(m_enc.hi, n, precision / 4).hi
        enc = Enclosure(lo, hi)
        if enc.width <= precision:
            return HeightValue.from_enclosure(enc)
        w /= 64
    raise PrecisionError("Weil height enclosure did not converge")


def nf_element_height(
    gamma: NumberFieldElement, precision: Fraction = DEFAULT_PRECISION
) -> HeightValue:
    """Weil height of an element of Q(alpha).

    Uses H(gamma) = M(char poly)^(1/d): the characteristic polynomial of
    multiplication by gamma is the minimal polynomial raised to the
    power d/deg(gamma), and Mahler measure is multiplicative, so no
    factorization is needed.
    """
    if gamma.is_zero():
        return HeightValue.from_exact(1)
    if gamma.is_rational():
        return height_rational(gamma.rational_value())
    d = gamma.base.degree
    cp = gamma.char_poly()
    precision = Fraction(precision)
    w = precision
    for _ in range(60):
        m_enc = mahler_enclosure(cp, w)
        lo = nth_root_enclosure(m_enc.lo, d, precision / 4).lo
        hi = nth_root_enclosure(m_enc.hi, d, precision / 4).hi
        enc = Enclosure(lo, hi)
        if enc.width <= precision:
            return HeightValue.from_enclosure(enc)
        w /= 64
    raise PrecisionError("element height enclosure did not converge")


# ---------------------------------------------------------------------------
# Kronecker test and Northcott enumeration


def is_root_of_unity(a: AlgebraicNumber) -> Tuple[bool, Optional[int]]:
    """Kronecker test: is a a root of unity, and of which order."""
    n = a.degree
    for k in range(1, 2 * n * n + 3):
        if euler_phi(k) != n:
            continue
        if a.min_poly == cyclotomic(k):
            return True, k
    return False, None


def northcott_enumerate(
    degree_max: int, height_max: Fraction
) -> List[IntPolynomial]:
    """All irreducible primitive integer polynomials (positive leading
    coefficient) of degree <= degree_max whose roots have Weil height at
    most height_max.

    The scan box is |a_n| <= X^n and |a_i| <= C(n,i) * X^n (a provable
    coefficient bound: |a_i| <= C(n,i) * M(f)); membership is then
    decided exactly by the Mahler filter M(f) <= X^n.
    """
    if not 1 <= degree_max <= NORTHCOTT_DEGREE_CAP:
        raise UnsupportedError(
            f"degree_max must be within [1, {NORTHCOTT_DEGREE_CAP}]"
        )
    height_max = Fraction(height_max)
    if height_max < 1:
        raise DomainError("height_max must be >= 1 (heights are >= 1)")
    out: List[IntPolynomial] = []
    for n in range(1, degree_max + 1):
        xn = height_max ** n
        an_max = int(xn)
        bounds = [int(math.comb(n, i) * xn) for i in range(n)]
        for an in range(1, an_max + 1):
            ranges = [range(-b, b + 1) for b in bounds]
            for lower in iter_product(*ranges):
                f = IntPolynomial(list(lower) + [an])
                if f.degree != n:
                    continue
                g = math.gcd(an, 0)
                for cc in lower:
                    g = math.gcd(g, abs(cc))
                g = math.gcd(g, an)
                if g != 1:
                    continue
                if not is_irreducible(f):
                    continue
                if mahler_leq(f, xn):
                    out.append(f)
    out.sort(key=lambda p: (p.degree, p.coeffs))
    return out
