"""Text and JSON formats shared by the library and the command line.

All numbers cross the boundary as exact rational strings "num/den" (or
plain integers); enclosures are {"lo": ..., "hi": ...} pairs.  The
univariate text grammar accepts forms like "x^3 - 2" and "2x^2 + x/2";
see docs/formats.md for the full grammar.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .enclosure import Enclosure
from .exceptions import DomainError, ParseError
from .heights import HeightValue
from .intpoly import IntPolynomial, _q_to_primitive
from .lattice import ConvexBody
from .multipoly import MultiPoly
from .numberfield import AlgebraicNumber, NumberFieldElement
from .siegel import IntMatrix, NFMatrix


def parse_rational(text: Union[str, int, float]) -> Fraction:
    """Exact rational from "p/q", integer, or decimal/scientific text."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise DomainError("refusing a float where an exact rational is required")
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def enclosure_to_json(enc: Enclosure, bits: int = 128) -> dict:
    """Serialize with outward dyadic rounding: endpoints stay certified
    but denominators are capped at 2**bits for readability."""
    rounded = enc.round_out(bits)
    return {"lo": format_rational(rounded.lo), "hi": format_rational(rounded.hi)}


def height_to_json(hv: HeightValue) -> dict:
    return {
        "exact": format_rational(hv.exact) if hv.exact is not None else None,
        "enclosure": enclosure_to_json(hv.enclosure),
    }


# ---------------------------------------------------------------------------
# univariate polynomial text grammar

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<var>x)|(?P<caret>\^)|(?P<plus>\+)"
    r"|(?P<minus>-)|(?P<star>\*))"
)


def parse_univariate_text(text: str) -> List[Fraction]:
    """Ascending rational coefficients of a univariate polynomial string.

    Grammar: terms joined by + or -, each term a rational coefficient,
    a power of x, or coefficient*x^k (the * is optional).  Raises
    ParseError carrying the character offset of the first bad token.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].strip()
            if not stripped:
                break
            raise ParseError(
                f"unexpected character {text[pos]!r} at offset {pos}", position=pos
            )
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    coeffs: dict = {}
    i = 0

    def bad(idx):
        raise ParseError(
            f"parse error at offset {tokens[idx][2]}", position=tokens[idx][2]
        )

    first = True
    while tokens[i][0] != "end":
        sign = 1
        if tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = -1
            i += 1
        elif not first:
            bad(i)
        first = False
        coef = None
        if tokens[i][0] == "number":
            coef = Fraction(tokens[i][1])
            i += 1
            if tokens[i][0] == "star":
                i += 1
                if tokens[i][0] != "var":
                    bad(i)
        exp = 0
        if tokens[i][0] == "var":
            exp = 1
            i += 1
            if tokens[i][0] == "caret":
                i += 1
                if tokens[i][0] != "number" or "/" in tokens[i][1]:
                    bad(i)
                exp = int(tokens[i][1])
                i += 1
        if coef is None:
            if exp == 0:
                bad(i)
            coef = Fraction(1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    if not coeffs:
        raise ParseError("empty polynomial", position=0)
    top = max(coeffs)
    return [coeffs.get(k, Fraction(0)) for k in range(top + 1)]


def parse_poly_input(data: Union[str, dict]) -> List[Fraction]:
    """Polynomial from text ("x^2 - 2") or JSON {"coeffs": [...]} form,
    as ascending rational coefficients."""
    if isinstance(data, dict):
        if "coeffs" not in data:
            raise ParseError('polynomial JSON must carry a "coeffs" array')
        return [parse_rational(c) for c in data["coeffs"]]
    text = data.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}", position=exc.pos) from exc
        return parse_poly_input(obj)
    return parse_univariate_text(text)


def to_int_polynomial(coeffs: Sequence[Fraction]) -> IntPolynomial:
    """Primitive integer polynomial proportional to the rational input."""
    poly = _q_to_primitive([Fraction(c) for c in coeffs])
    if poly.is_zero():
        raise DomainError("zero polynomial")
    return poly


def int_polynomial_to_json(f: IntPolynomial) -> dict:
    return {"coeffs": list(f.coeffs)}


# ---------------------------------------------------------------------------
# multivariate polynomials


def multipoly_to_json(P: MultiPoly) -> dict:
    terms = []
    for exps in sorted(P.terms):
        c = P.terms[exps]
        if isinstance(c, NumberFieldElement):
            coeff = {"rep": [format_rational(r) for r in c.rep]}
        else:
            coeff = format_rational(c)
        terms.append({"coeff": coeff, "exps": list(exps)})
    return {"arity": P.arity, "terms": terms}


def multipoly_from_json(
    data: dict, base: Optional[AlgebraicNumber] = None
) -> MultiPoly:
    if "arity" not in data or "terms" not in data:
        raise ParseError('multivariate JSON needs "arity" and "terms"')
    arity = int(data["arity"])
    terms = {}
    for item in data["terms"]:
        exps = tuple(int(e) for e in item["exps"])
        c = item["coeff"]
        if isinstance(c, dict):
            if base is None:
                raise ParseError("rep coefficients need a base generator")
            coeff = NumberFieldElement(base, [parse_rational(r) for r in c["rep"]])
        else:
            coeff = parse_rational(c)
        terms[exps] = coeff
    return MultiPoly(arity, terms)


# ---------------------------------------------------------------------------
# matrices and bodies


def int_matrix_from_json(data: dict) -> IntMatrix:
    if "entries" not in data:
        raise ParseError('matrix JSON needs "entries"')
    entries = data["entries"]
    if "rows" in data and len(entries) != int(data["rows"]):
        raise ParseError("row count disagrees with entries")
    if "cols" in data and entries and len(entries[0]) != int(data["cols"]):
        raise ParseError("column count disagrees with entries")
    return IntMatrix(entries)


def nf_matrix_from_json(data: dict) -> NFMatrix:
    if "base" not in data or "entries" not in data:
        raise ParseError('NF matrix JSON needs "base" and "entries"')
    base_poly = to_int_polynomial(parse_poly_input(data["base"]))
    base = _algebraic_from_poly(base_poly, data.get("root_interval"))
    rows = []
    for row in data["entries"]:
        cells = []
        for cell in row:
            if isinstance(cell, dict):
                rep = [parse_rational(r) for r in cell["rep"]]
            elif isinstance(cell, list):
                rep = [parse_rational(r) for r in cell]
            else:
                rep = [parse_rational(cell)]
            cells.append(NumberFieldElement(base, rep))
        rows.append(cells)
    return NFMatrix(base, rows)


def _algebraic_from_poly(
    poly: IntPolynomial, root_interval=None
) -> AlgebraicNumber:
    """Root selection: an explicit interval, else the largest real root,
    else conjugate index 0."""
    if root_interval is not None:
        lo, hi = (parse_rational(v) for v in root_interval)
        return AlgebraicNumber(poly, interval=(lo, hi))
    from .intpoly import isolate_real_roots

    real = isolate_real_roots(poly)
    if real:
        return AlgebraicNumber(poly, interval=real[-1])
    return AlgebraicNumber(poly, conjugate_index=0)


def body_from_json(data: dict) -> ConvexBody:
    if "forms" not in data or "bounds" not in data:
        raise ParseError('body JSON needs "forms" and "bounds"')
    forms = [[parse_rational(c) for c in row] for row in data["forms"]]
    bounds = [parse_rational(c) for c in data["bounds"]]
    return ConvexBody(forms, bounds)


def body_to_json(body: ConvexBody) -> dict:
    return {
        "forms": [[format_rational(c) for c in row] for row in body.forms],
        "bounds": [format_rational(c) for c in body.bounds],
    }
