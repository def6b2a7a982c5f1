"""Exact univariate polynomials over Z, with the root machinery the rest
of the library is built on: content/primitive splitting, gcd and
squarefree decomposition over Q, Sturm sequences, real root isolation,
cyclotomic polynomials, and desk-scale irreducibility testing.

Coefficients are stored ascending (coeffs[k] is the coefficient of x^k)
with no trailing zeros.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from .exceptions import DomainError, UnsupportedError

IRREDUCIBILITY_DEGREE_CAP = 12


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise DomainError("negative polynomial power")
        out = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def shift_int(self, a: int) -> "IntPolynomial":
        """Taylor shift f(x + a) for integer a."""
        out = [0]
        for c in reversed(self.coeffs):
            # out = out * (x + a) + c
            new = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                new[i + 1] += v
                new[i] += v * a
            new[0] += c
            out = new
        return IntPolynomial(out)

    def reversed_poly(self) -> "IntPolynomial":
        """x^deg * f(1/x)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def to_fractions(self) -> List[Fraction]:
        return [Fraction(c) for c in self.coeffs]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    def max_abs_coeff(self) -> int:
        if self.is_zero():
            return 0
        return max(abs(c) for c in self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# integer utilities


def factor_integer(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise DomainError("factor_integer expects a positive integer")
    out: dict = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 1_000_000:
        if n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        else:
            f += wheel[i]
            i = (i + 1) % 8
    if n > 1:
        if f * f > n:
            out[n] = out.get(n, 0) + 1
        else:
            for p in _pollard_split(n):
                out[p] = out.get(p, 0) + 1
    return out


def _pollard_split(n: int) -> List[int]:
    if n == 1:
        return []
    if _is_probable_prime(n):
        return [n]
    d = _pollard_rho(n)
    return _pollard_split(d) + _pollard_split(n // d)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def divisors(n: int) -> List[int]:
    """Positive divisors of n != 0, ascending."""
    if n == 0:
        raise DomainError("divisors of zero")
    fac = factor_integer(abs(n))
    out = [1]
    for p, e in fac.items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# content, gcd, squarefree structure


def content_and_primitive(f: IntPolynomial) -> Tuple[int, IntPolynomial]:
    """Split f into (content, primitive part); content is positive."""
    if f.is_zero():
        raise DomainError("zero polynomial has no content")
    c = 0
    for a in f.coeffs:
        c = math.gcd(c, abs(a))
    return c, IntPolynomial(a // c for a in f.coeffs)


def _qdivmod(a: List[Fraction], b: List[Fraction]):
    """Quotient and remainder of rational coefficient lists (ascending)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    if db < 0:
        raise DomainError("division by zero polynomial")
    q = [Fraction(0)] * max(0, len(a) - db)
    while len(a) - 1 >= db:
        k = len(a) - 1 - db
        coef = a[-1] / b[-1]
        q[k] = coef
        for i in range(db + 1):
            a[k + i] -= coef * b[i]
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _q_to_primitive(qs: Sequence[Fraction]) -> IntPolynomial:
    """Primitive integer polynomial proportional (positive ratio) to qs."""
    qs = [Fraction(c) for c in qs]
    while qs and qs[-1] == 0:
        qs.pop()
    if not qs:
        return IntPolynomial.zero()
    den = 1
    for c in qs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in qs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    return IntPolynomial(c // g for c in ints)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q, normalized to positive leading coefficient."""
    a = f.to_fractions()
    b = g.to_fractions()
    while any(c != 0 for c in b):
        _, r = _qdivmod(a, b)
        a, b = b, r
    result = _q_to_primitive(a)
    if not result.is_zero() and result.leading < 0:
        result = -result
    return result


def poly_divide_exact(f: IntPolynomial, g: IntPolynomial):
    """f / g as an IntPolynomial if g divides f over Z, else None."""
    if g.is_zero():
        raise DomainError("division by zero polynomial")
    q, r = _qdivmod(f.to_fractions(), g.to_fractions())
    if any(c != 0 for c in r):
        return None
    if any(c.denominator != 1 for c in q):
        return None
    return IntPolynomial(int(c) for c in q)


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """Primitive squarefree polynomial with the same roots as f."""
    if f.is_zero():
        raise DomainError("squarefree part of zero polynomial")
    _, fp = content_and_primitive(f)
    if fp.degree < 1:
        return IntPolynomial([1])
    g = poly_gcd(fp, fp.derivative())
    if g.degree == 0:
        result = fp
    else:
        q, _ = _qdivmod(fp.to_fractions(), g.to_fractions())
        result = _q_to_primitive(q)
    if result.leading < 0:
        result = -result
    return result


def squarefree_decomposition(f: IntPolynomial) -> List[Tuple[IntPolynomial, int]]:
    """Yun decomposition: list of (g_i, i) with f ~ prod g_i^i, g_i squarefree."""
    if f.is_zero():
        raise DomainError("squarefree decomposition of zero polynomial")
    _, fp = content_and_primitive(f)
    if fp.leading < 0:
        fp = -fp
    if fp.degree < 1:
        return []
    a0 = poly_gcd(fp, fp.derivative())
    b = _q_to_primitive(_qdivmod(fp.to_fractions(), a0.to_fractions())[0])
    c = _qdivmod(fp.derivative().to_fractions(), a0.to_fractions())[0]
    d = [ci - bi for ci, bi in _zip_pad(c, _derive_q(b.to_fractions()))]
    out = []
    i = 1
    while b.degree > 0:
        ai = poly_gcd(b, _q_to_primitive(d))
        if ai.degree > 0:
            out.append((ai, i))
        b_next = _q_to_primitive(_qdivmod(b.to_fractions(), ai.to_fractions())[0])
        c = _qdivmod(d, ai.to_fractions())[0]
        d = [ci - bi for ci, bi in _zip_pad(c, _derive_q(b_next.to_fractions()))]
        b = b_next
        i += 1
    return out


def _derive_q(qs: Sequence[Fraction]) -> List[Fraction]:
    return [k * c for k, c in enumerate(qs) if k > 0]


def _zip_pad(a: Sequence[Fraction], b: Sequence[Fraction]):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


# ---------------------------------------------------------------------------
# Sturm sequences and real root isolation


def sturm_sequence(f: IntPolynomial) -> List[IntPolynomial]:
    """Sturm chain of the squarefree part of f, primitivized at each step."""
    g = squarefree_part(f)
    seq = [g, g.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, rem = _qdivmod(seq[-2].to_fractions(), seq[-1].to_fractions())
        nxt = _q_to_primitive([-c for c in rem])
        if nxt.is_zero():
            break
        seq.append(nxt)
    return [s for s in seq if not s.is_zero()]


def sign_variations(seq: Sequence[IntPolynomial], x: Fraction) -> int:
    signs = []
    for s in seq:
        v = s(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: IntPolynomial, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of f in the half-open interval (a, b]."""
    if a > b:
        raise DomainError("interval endpoints out of order")
    seq = sturm_sequence(f)
    return sign_variations(seq, Fraction(a)) - sign_variations(seq, Fraction(b))


def cauchy_root_bound(f: IntPolynomial) -> Fraction:
    """B with every complex root strictly inside |z| < B."""
    if f.is_zero() or f.degree < 1:
        raise DomainError("root bound needs degree >= 1")
    lead = abs(f.leading)
    return 1 + Fraction(max(abs(c) for c in f.coeffs[:-1]), lead)


def isolate_real_roots(f: IntPolynomial) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, each containing exactly one real root of f.

    The squarefree part is taken internally, so multiple roots are
    reported once.  Interval endpoints are never roots.
    """
    if f.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    g = squarefree_part(f)
    if g.degree < 1:
        return []
    seq = sturm_sequence(g)
    bound = cauchy_root_bound(g)
    out: List[Tuple[Fraction, Fraction]] = []

    def var(x: Fraction) -> int:
        return sign_variations(seq, x)

    def recurse(a: Fraction, b: Fraction, va: int, vb: int):
        count = va - vb
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        m = (a + b) / 2
        if g(m) == 0:
            # rational root at the midpoint; wall it off with a tight interval
            w = (b - a) / 8
            while True:
                vl, vr = var(m - w), var(m + w)
                if vl - vr == 1 and g(m - w) != 0 and g(m + w) != 0:
                    break
                w /= 2
            out.append((m - w, m + w))
            recurse(a, m - w, va, vl)
            recurse(m + w, b, vr, vb)
        else:
            vm = var(m)
            recurse(a, m, va, vm)
            recurse(m, b, vm, vb)

    recurse(-bound, bound, var(-bound), var(bound))
    out.sort(key=lambda iv: iv[0])
    return out


def refine_root_interval(
    f: IntPolynomial, interval: Tuple[Fraction, Fraction], width: Fraction
) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree f below the given width.

    Requires that f changes sign across the interval (true for an
    isolating interval of a simple real root).
    """
    a, b = Fraction(interval[0]), Fraction(interval[1])
    fa = f(a)
    fb = f(b)
    if fa == 0 or fb == 0:
        raise DomainError("isolating interval endpoints must not be roots")
    if (fa > 0) == (fb > 0):
        raise DomainError("no sign change across the interval")
    while b - a > width:
        m = (a + b) / 2
        fm = f(m)
        if fm == 0:
            m = a + (b - a) / 3  # dodge an exact rational hit
            fm = f(m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return a, b


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def euler_phi(k: int) -> int:
    if k < 1:
        raise DomainError("euler_phi expects k >= 1")
    result = k
    for p in factor_integer(k):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial."""
    if k < 1:
        raise DomainError("cyclotomic index must be >= 1")
    poly = IntPolynomial([-1] + [0] * (k - 1) + [1])  # x^k - 1
    for d in divisors(k):
        if d == k:
            continue
        q = poly_divide_exact(poly, cyclotomic(d))
        if q is None:
            raise DomainError(f"cyclotomic division failed at k={k}, d={d}")
        poly = q
    return poly


# ---------------------------------------------------------------------------
# irreducibility over Q (degree-capped exhaustive search)

_FILTER_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def _pmod_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod_rem(a: List[int], b: List[int], p: int) -> List[int]:
    a = [c % p for c in a]
    _pmod_trim(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        coef = a[-1] * inv % p
        k = len(a) - 1 - db
        for i in range(db + 1):
            a[k + i] = (a[k + i] - coef * b[i]) % p
        _pmod_trim(a)
    return a


def _pmod_gcd(a: List[int], b: List[int], p: int) -> List[int]:
    a = _pmod_trim([c % p for c in a])
    b = _pmod_trim([c % p for c in b])
    while b:
        a, b = b, _pmod_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pmod_mulmod(a: List[int], b: List[int], g: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _pmod_rem(out, g, p)


def _pmod_powmod(a: List[int], e: int, g: List[int], p: int) -> List[int]:
    result = [1]
    base = _pmod_rem(list(a), g, p)
    while e:
        if e & 1:
            result = _pmod_mulmod(result, base, g, p)
        base = _pmod_mulmod(base, base, g, p)
        e >>= 1
    return result


def _factor_degrees_mod_p(f: IntPolynomial, p: int):
    """Degrees (with multiplicity) of the irreducible factors of f mod p,
    or None when the reduction is unusable (lc vanishes or not squarefree)."""
    if f.leading % p == 0:
        return None
    g = [c % p for c in f.coeffs]
    deriv = [(k * c) % p for k, c in enumerate(g) if k > 0]
    if len(_pmod_gcd(g, deriv, p)) != 1:
        return None
    inv = pow(g[-1], -1, p)
    g = [c * inv % p for c in g]
    degrees = []
    h = [0, 1]  # x
    d = 0
    work = list(g)
    while len(work) - 1 > 0:
        d += 1
        if 2 * d > len(work) - 1:
            degrees.append(len(work) - 1)
            break
        h = _pmod_powmod(h, p, work, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        r = _pmod_gcd(work, _pmod_trim(diff), p)
        if len(r) - 1 > 0:
            degrees.extend([d] * ((len(r) - 1) // d))
            work = _pmod_divide(work, r, p)
            h = _pmod_rem(h, work, p) if len(work) > 1 else [0]
    return degrees


def _pmod_divide(a: List[int], b: List[int], p: int) -> List[int]:
    a = [c % p for c in a]
    _pmod_trim(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db:
        coef = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = coef
        for i in range(db + 1):
            a[k + i] = (a[k + i] - coef * b[i]) % p
        _pmod_trim(a)
    return _pmod_trim(q) or [0]


def _subset_sums(degrees: List[int]) -> set:
    sums = 1  # bitset
    for d in degrees:
        sums |= sums << d
    return {i for i in range(sums.bit_length()) if (sums >> i) & 1}


def _has_rational_root(f: IntPolynomial) -> bool:
    a0, an = f.constant, f.leading
    if a0 == 0:
        return True
    for q in divisors(an):
        for p in divisors(a0):
            if math.gcd(p, q) != 1:
                continue
            x = Fraction(p, q)
            if f(x) == 0 or f(-x) == 0:
                return True
    return False


def _mignotte_bound(f: IntPolynomial, k: int, i: int) -> int:
    """Bound on |coefficient i| of any degree-k integer factor of f."""
    norm2 = iroot_ceil(sum(c * c for c in f.coeffs))
    bound = math.comb(k - 1, i) * norm2
    if i >= 1:
        bound += math.comb(k - 1, i - 1) * abs(f.leading)
    return bound


def iroot_ceil(n: int) -> int:
    from .enclosure import iroot

    r = iroot(n, 2)
    return r if r * r == n else r + 1


def is_irreducible(f: IntPolynomial, degree_cap: int = IRREDUCIBILITY_DEGREE_CAP) -> bool:
    """Exact irreducibility over Q for degrees up to the cap.

    Strategy: rational root test, squarefreeness, factor-degree
    filtering modulo several small primes, and finally complete
    factorization modulo one prime exceeding twice the Mignotte
    coefficient bound, where every true integer factor is visible as a
    subset of the modular factors (checked by exact trial division).
    """
    if f.is_zero() or f.degree < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    if f.degree > degree_cap:
        raise UnsupportedError(
            f"degree {f.degree} above irreducibility cap {degree_cap}"
        )
    _, g = content_and_primitive(f)
    if g.leading < 0:
        g = -g
    n = g.degree
    if n == 1:
        return True
    if g.constant == 0:
        return False  # divisible by x
    if _has_rational_root(g):
        return False
    if n <= 3:
        return True  # no rational root and degree 2 or 3
    if poly_gcd(g, g.derivative()).degree > 0:
        return False  # repeated factor

    feasible = set(range(2, n - 1))
    used = 0
    for p in _FILTER_PRIMES:
        degs = _factor_degrees_mod_p(g, p)
        if degs is None:
            continue
        if len(degs) == 1:
            return True  # irreducible mod p
        feasible &= _subset_sums(degs)
        used += 1
        if not any(2 <= k <= n // 2 for k in feasible):
            return True
        if used >= 6:
            break

    return not _reducible_by_modular_recombination(g)


def _next_good_prime(g: IntPolynomial, floor_value: int) -> int:
    """Smallest prime above floor_value with unit leading coefficient and
    squarefree reduction of g."""
    p = max(floor_value, 5)
    if p % 2 == 0:
        p += 1
    while True:
        if _is_probable_prime(p) and g.leading % p != 0:
            reduced = [c % p for c in g.coeffs]
            deriv = [(k * c) % p for k, c in enumerate(g.coeffs) if k > 0]
            if len(_pmod_gcd(reduced, deriv, p)) == 1:
                return p
        p += 2


def _pmod_random_poly(n: int, p: int, rng) -> List[int]:
    return _pmod_trim([rng.randrange(p) for _ in range(n)]) or [1]


def _equal_degree_split(block: List[int], d: int, p: int, rng) -> List[List[int]]:
    """Cantor-Zassenhaus: split a monic squarefree product of degree-d
    irreducibles mod an odd prime into the irreducibles."""
    n = len(block) - 1
    if n == d:
        return [block]
    exponent = (p ** d - 1) // 2
    while True:
        a = _pmod_random_poly(n, p, rng)
        h = _pmod_gcd(block, a, p)
        if 0 < len(h) - 1 < n:
            left = h
        else:
            b = _pmod_powmod(a, exponent, block, p)
            b = list(b) if b else [0]
            b[0] = (b[0] - 1) % p
            left = _pmod_gcd(block, _pmod_trim(b) or [0], p)
            if not 0 < len(left) - 1 < n:
                continue
        right = _pmod_divide(block, left, p)
        inv = pow(right[-1], -1, p)
        right = [c * inv % p for c in right]
        return _equal_degree_split(left, d, p, rng) + _equal_degree_split(
            right, d, p, rng
        )


def _pmod_factor_squarefree(g: IntPolynomial, p: int, rng) -> List[List[int]]:
    """Monic irreducible factors of a squarefree g modulo p."""
    inv = pow(g.leading % p, -1, p)
    work = _pmod_trim([c * inv % p for c in g.coeffs])
    blocks = []
    h = [0, 1]
    d = 0
    while len(work) - 1 > 0:
        d += 1
        if 2 * d > len(work) - 1:
            blocks.append((work, len(work) - 1))
            break
        h = _pmod_powmod(h, p, work, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        r = _pmod_gcd(work, _pmod_trim(diff) or [0], p)
        if len(r) - 1 > 0:
            blocks.append((r, d))
            work = _pmod_divide(work, r, p)
            h = _pmod_rem(h, work, p) if len(work) > 1 else [0]
    out = []
    for block, d in blocks:
        out.extend(_equal_degree_split(block, d, p, rng))
    return out


def _centered(v: int, p: int) -> int:
    v %= p
    return v - p if v > p // 2 else v


def _reducible_by_modular_recombination(g: IntPolynomial) -> bool:
    """Decide reducibility of a primitive squarefree g (degree >= 4, no
    rational roots) by factoring modulo one large prime and trial
    dividing every small subset product.

    The prime exceeds twice the Mignotte bound scaled by the leading
    coefficient, so the centered lift of lc * (subset product) recovers
    any true factor exactly; exhaustiveness over subsets makes the
    negative answer a proof of irreducibility.
    """
    import random as _random
    from itertools import combinations

    n = g.degree
    bound = max(
        _mignotte_bound(g, k, i) for k in range(1, n) for i in range(k + 1)
    )
    lc = abs(g.leading)
    p = _next_good_prime(g, 2 * bound * lc + 3)
    rng = _random.Random(0x5EED ^ hash(g.coeffs))
    factors = _pmod_factor_squarefree(g, p, rng)
    r = len(factors)
    if r == 1:
        return False
    factors.sort(key=lambda u: (len(u), u))
    for size in range(1, r // 2 + 1):
        for subset in combinations(range(r), size):
            prod = [g.leading % p]
            for idx in subset:
                prod = _pmod_mul(prod, factors[idx], p)
            candidate = IntPolynomial([_centered(c, p) for c in prod])
            if candidate.degree < 1:
                continue
            _, prim = content_and_primitive(candidate)
            if poly_divide_exact(g, prim) is not None:
                return True
    return False


def _pmod_mul(a: List[int], b: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _pmod_trim(out) or [0]
