"""Certified complex root enclosures for integer polynomials.

Floating point seeds (numpy, with an mpmath fallback at higher working
precision) are polished by exact rational Newton steps and certified by
the residual bound: for squarefree g of degree n and g'(z) != 0, some
root of g lies within n*|g(z)/g'(z)| of z.  Once the n disks are
pairwise disjoint each contains exactly one root, which upgrades the
float guesses to rigorous enclosures.  All certificates are computed in
exact rational arithmetic; the floats only ever choose starting points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .enclosure import Enclosure, sqrt_enclosure, _round_down
from .exceptions import DomainError, PrecisionError
from .intpoly import IntPolynomial, squarefree_decomposition

CRat = Tuple[Fraction, Fraction]


def _c_eval(coeffs, z: CRat) -> CRat:
    re, im = Fraction(0), Fraction(0)
    zr, zi = z
    for c in reversed(coeffs):
        re, im = re * zr - im * zi + c, re * zi + im * zr
    return re, im


def _c_abs2(z: CRat) -> Fraction:
    return z[0] * z[0] + z[1] * z[1]


def _c_round(z: CRat, bits: int) -> CRat:
    return _round_down(z[0], bits), _round_down(z[1], bits)


class RootDisk:
    """Disk certified to contain exactly one root of a squarefree polynomial.

    radius_sq bounds the squared distance from center to that root.
    """

    __slots__ = ("center", "radius_sq")

    def __init__(self, center: CRat, radius_sq: Fraction):
        self.center = center
        self.radius_sq = radius_sq

    def radius_upper(self, err: Fraction) -> Fraction:
        if self.radius_sq == 0:
            return Fraction(0)
        return sqrt_enclosure(self.radius_sq, err).hi

    def modulus_enclosure(self, err: Fraction) -> Enclosure:
        """Enclosure of |root| of width <= err (assuming radius small enough)."""
        r_hi = self.radius_upper(err / 8)
        middle = sqrt_enclosure(_c_abs2(self.center), err / 4)
        lo = middle.lo - r_hi
        return Enclosure(max(Fraction(0), lo), middle.hi + r_hi)

    def real_enclosure(self, err: Fraction) -> Enclosure:
        r_hi = self.radius_upper(err / 8)
        return Enclosure(self.center[0] - r_hi, self.center[0] + r_hi)

    def imag_enclosure(self, err: Fraction) -> Enclosure:
        r_hi = self.radius_upper(err / 8)
        return Enclosure(self.center[1] - r_hi, self.center[1] + r_hi)

    def __repr__(self):
        return f"RootDisk(({float(self.center[0])}, {float(self.center[1])}), rsq={float(self.radius_sq)})"


def _float_seeds(g: IntPolynomial) -> List[CRat]:
    import numpy as np

    desc = [float(c) for c in reversed(g.coeffs)]
    if all(abs(c) < 1e300 for c in desc):
        try:
            roots = np.roots(desc)
            return [
                (
                    _round_down(Fraction(float(r.real)), 64),
                    _round_down(Fraction(float(r.imag)), 64),
                )
                for r in roots
            ]
        except Exception:
            pass
    return _mpmath_seeds(g, 60)


def _mpmath_seeds(g: IntPolynomial, digits: int) -> List[CRat]:
    import mpmath

    with mpmath.workdps(digits + 10 * g.degree):
        roots = mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(g.coeffs)], maxsteps=200, extraprec=200
        )
        bits = int(digits * 3.4) + 16
        return [
            (
                _round_down(Fraction(mpmath.nstr(r.real, digits + 5)), bits),
                _round_down(Fraction(mpmath.nstr(r.imag, digits + 5)), bits),
            )
            for r in roots
        ]


def _pairwise_disjoint(disks: List[RootDisk]) -> bool:
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            zi, zj = disks[i].center, disks[j].center
            d2 = _c_abs2((zi[0] - zj[0], zi[1] - zj[1]))
            ri, rj = disks[i].radius_sq, disks[j].radius_sq
            s = d2 - ri - rj
            if s <= 0 or s * s <= 4 * ri * rj:
                return False
    return True


def root_disks(g: IntPolynomial, radius_sq_target: Fraction) -> List[RootDisk]:
    """Certified disks around all complex roots of a squarefree g.

    Each returned disk contains exactly one root and has squared radius
    at most radius_sq_target.  Raises PrecisionError if certification
    fails within the iteration budget.
    """
    n = g.degree
    if n < 1:
        raise DomainError("root_disks needs degree >= 1")
    if n == 1:
        root = Fraction(-g.constant, g.leading)
        return [RootDisk((root, Fraction(0)), Fraction(0))]
    deriv = g.derivative()
    n_sq = Fraction(n * n)

    seeds = _float_seeds(g)
    bits = 128
    for attempt in range(8):
        centers = list(seeds)
        disks = None
        for _ in range(40):
            new_centers = []
            ok = True
            for z in centers:
                val = _c_eval(g.coeffs, z)
                der = _c_eval(deriv.coeffs, z)
                d2 = _c_abs2(der)
                if d2 == 0:
                    ok = False
                    new_centers.append(z)
                    continue
                # Newton step: z - val/der, via multiplication by conj(der)
                qr = (val[0] * der[0] + val[1] * der[1]) / d2
                qi = (val[1] * der[0] - val[0] * der[1]) / d2
                new_centers.append(_c_round((z[0] - qr, z[1] - qi), bits))
            centers = new_centers
            if not ok:
                break
            cand = []
            certified = True
            for z in centers:
                val = _c_eval(g.coeffs, z)
                der = _c_eval(deriv.coeffs, z)
                d2 = _c_abs2(der)
                if d2 == 0:
                    certified = False
                    break
                rho = n_sq * _c_abs2(val) / d2
                if rho > radius_sq_target:
                    certified = False
                    break
                cand.append(RootDisk(z, rho))
            if certified and _pairwise_disjoint(cand):
                return cand
        bits *= 2
        if attempt >= 1:
            seeds = _mpmath_seeds(g, 40 * (attempt + 1))
    raise PrecisionError(
        f"could not certify root disks of {g!r} at target {float(radius_sq_target)}"
    )


def ordered_root_boxes(
    f: IntPolynomial, precision: Fraction
) -> List[Tuple[Enclosure, Enclosure]]:
    """Complex boxes around the distinct roots of f, canonically ordered.

    Order is by (real midpoint, imaginary midpoint) of the certified
    boxes, refined at the requested precision, which fixes a
    deterministic conjugate numbering.
    """
    precision = Fraction(precision)
    target = (precision / 4) ** 2
    g = _squarefree_of(f)
    disks = root_disks(g, target)
    boxes = [
        (d.real_enclosure(precision), d.imag_enclosure(precision)) for d in disks
    ]
    boxes.sort(key=lambda b: (b[0].mid, b[1].mid))
    return boxes


def _squarefree_of(f: IntPolynomial) -> IntPolynomial:
    from .intpoly import squarefree_part

    return squarefree_part(f)


def root_moduli(f: IntPolynomial, precision: Fraction) -> List[Enclosure]:
    """Enclosures of |root| for every root of f, counted with multiplicity.

    Each enclosure has width <= precision.  The product of the
    enclosures times |leading| is checked against |constant| as an
    internal consistency test.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise DomainError("precision must be positive")
    if f.is_zero() or f.degree < 1:
        raise DomainError("root_moduli needs a nonzero polynomial of degree >= 1")
    target = (precision / 8) ** 2
    out: List[Tuple[Fraction, Enclosure]] = []
    for factor, mult in squarefree_decomposition(f):
        for disk in root_disks(factor, target):
            enc = disk.modulus_enclosure(precision)
            for _ in range(mult):
                out.append((disk.center[0], enc))
    out.sort(key=lambda pair: (pair[1].mid, pair[0]))
    moduli = [enc for _, enc in out]
    _check_product(f, moduli)
    return moduli


def _check_product(f: IntPolynomial, moduli: List[Enclosure]) -> None:
    from .exceptions import InternalError

    prod = Enclosure.exact(abs(f.leading))
    for enc in moduli:
        prod = prod * enc
    if not prod.contains(abs(f.constant)):
        raise InternalError(
            "root moduli product does not enclose |constant coefficient|"
        )


def max_root_modulus(f: IntPolynomial, precision: Fraction) -> Enclosure:
    """Enclosure of the largest root modulus of f."""
    moduli = root_moduli(f, precision)
    return Enclosure(max(m.lo for m in moduli), max(m.hi for m in moduli))
