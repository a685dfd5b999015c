"""Sparse bivariate polynomials over L and words of F(r1, r2).

``Poly`` lives in L[X1, X2] with unrestricted exponents; ``QuotientPoly``
keeps its exponents reduced modulo (r1, r2), i.e. lives in
L[X1, X2] / <X1^r1 - 1, X2^r2 - 1>.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from .gf import FieldElement, GaloisField
from .lattice import DeltaSet, MonomialOrder, Point, leq_partial, padd, psub


class Poly:
    __slots__ = ("field", "terms")

    def __init__(self, field: GaloisField, terms: Mapping[Point, FieldElement] | None = None):
        self.field = field
        self.terms: dict[Point, FieldElement] = {}
        if terms:
            for m, c in terms.items():
                if c.field is not field:
                    raise ValueError("coefficient from a different field")
                if m[0] < 0 or m[1] < 0:
                    raise ValueError(f"negative exponent {m}")
                if c:
                    self.terms[(int(m[0]), int(m[1]))] = c

    @classmethod
    def one(cls, field: GaloisField) -> "Poly":
        return cls(field, {(0, 0): field.one})

    @classmethod
    def monomial(cls, field: GaloisField, exp: Point, coeff: FieldElement | None = None) -> "Poly":
        return cls(field, {exp: field.one if coeff is None else coeff})

    def _new(self, terms: dict[Point, FieldElement]) -> "Poly":
        out = Poly.__new__(Poly)
        out.field = self.field
        out.terms = terms
        return out

    # algebra
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            v = c if v is None else v + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return self._new(terms)

    def __neg__(self) -> "Poly":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: FieldElement) -> "Poly":
        if not c:
            return self._new({})
        return self._new({m: v * c for m, v in self.terms.items()})

    def shift(self, r: Point) -> "Poly":
        """Multiply by the monomial X^r."""
        if r[0] < 0 or r[1] < 0:
            raise ValueError(f"negative shift {r}")
        return self._new({padd(m, r): c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out = self._new({})
        for m, c in other.terms.items():
            out = out + self.shift(m).scale(c)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # order-dependent views
    def leading_power(self, order: MonomialOrder) -> Point:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading power product")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder) -> FieldElement:
        return self.terms[self.leading_power(order)]

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Point, FieldElement]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def support(self) -> list[Point]:
        return list(self.terms)

    # evaluation
    def evaluate(self, x1: FieldElement, x2: FieldElement) -> FieldElement:
        f = self.field
        total = f.zero
        for (e1, e2), c in self.terms.items():
            total = total + c * (x1**e1) * (x2**e2)
        return total

    def evaluate_power(self, alpha: tuple[FieldElement, FieldElement], m: Point) -> FieldElement:
        """f(alpha^m) = f(alpha1^m1, alpha2^m2)."""
        return self.evaluate(alpha[0] ** m[0], alpha[1] ** m[1])

    def project(self, bounds: tuple[int, int]) -> "QuotientPoly":
        return QuotientPoly(self.field, bounds, self.terms)

    def format(self, order: MonomialOrder = MonomialOrder.LEX) -> str:
        return format_poly(self, order)

    def __repr__(self) -> str:
        return format_poly(self, MonomialOrder.LEX)


class QuotientPoly(Poly):
    """Element of L(r1, r2); colliding exponents are summed on construction."""

    __slots__ = ("bounds",)

    def __init__(self, field: GaloisField, bounds: tuple[int, int],
                 terms: Mapping[Point, FieldElement] | None = None):
        self.field = field
        self.bounds = (int(bounds[0]), int(bounds[1]))
        r1, r2 = self.bounds
        acc: dict[Point, FieldElement] = {}
        for m, c in (terms or {}).items():
            if c.field is not field:
                raise ValueError("coefficient from a different field")
            key = (m[0] % r1, m[1] % r2)
            v = acc.get(key)
            acc[key] = c if v is None else v + c
        self.terms = {m: c for m, c in acc.items() if c}

    def _new(self, terms: dict[Point, FieldElement]) -> "QuotientPoly":
        out = QuotientPoly.__new__(QuotientPoly)
        out.field = self.field
        out.bounds = self.bounds
        out.terms = terms
        return out

    def shift(self, r: Point) -> "QuotientPoly":
        return QuotientPoly(self.field, self.bounds, {padd(m, r): c for m, c in self.terms.items()})

    def weight(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.terms == other.terms

    __hash__ = Poly.__hash__


def project(f: Poly, bounds: tuple[int, int]) -> QuotientPoly:
    return f.project(bounds)


def leading_power(f: Poly, order: MonomialOrder) -> Point:
    return f.leading_power(order)


def evaluate(f: Poly, point: tuple[FieldElement, FieldElement]) -> FieldElement:
    return f.evaluate(point[0], point[1])


def defining_set_of_poly_set(polys: Iterable[Poly], alpha: tuple[FieldElement, FieldElement],
                             bounds: tuple[int, int]) -> set[Point]:
    """All m in I with f(alpha^m) = 0 for every f (exhaustive over I)."""
    polys = list(polys)
    r1, r2 = bounds
    a1, a2 = alpha
    n = a1.field.n
    # exponent-level evaluation: coefficient log + e1*m1*log(a1) + e2*m2*log(a2)
    logs = [[(c.log, e1 * a1.log, e2 * a2.log) for (e1, e2), c in f.terms.items()] for f in polys]
    field = a1.field
    out = set()
    for m1 in range(r1):
        for m2 in range(r2):
            ok = True
            for terms in logs:
                total = field.zero
                for cl, k1, k2 in terms:
                    total = field.add(total, field.element((cl + k1 * m1 + k2 * m2) % n))
                if total:
                    ok = False
                    break
            if ok:
                out.add((m1, m2))
    return out


def reduce_tail(f: Poly, basis: list[Poly], order: MonomialOrder) -> Poly:
    """Reduce every non-leading term of f that lies above some LP(basis)."""
    lps = [g.leading_power(order) for g in basis]
    lead = f.leading_power(order)
    while True:
        target = None
        for m, c in f.sorted_terms(order):
            if m == lead:
                continue
            for g, s in zip(basis, lps):
                if leq_partial(s, m):
                    target = (m, c, g, s)
                    break
            if target:
                break
        if target is None:
            return f
        m, c, g, s = target
        f = f - g.shift(psub(m, s)).scale(c / g.terms[s])


def normalize_minimal_set(polys: list[Poly], delta: DeltaSet | None, order: MonomialOrder) -> list[Poly]:
    """Reduce tails so every non-leading exponent lies in the delta-set of LP(polys).

    Leading terms are untouched; each subtraction is a monomial multiple of
    another member with a smaller leading power, so recurrences are kept.
    """
    polys = list(polys)
    lps = [f.leading_power(order) for f in polys]
    if delta is not None:
        expected = set(delta.defining_points)
        if set(lps) != expected:
            raise ValueError(f"leading powers {lps} do not match defining points {sorted(expected)}")
    return [reduce_tail(f, polys, order) for f in polys]


# text format ---------------------------------------------------------------

def _fmt_monomial(m: Point) -> str:
    parts = []
    for name, e in (("X1", m[0]), ("X2", m[1])):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly, order: MonomialOrder = MonomialOrder.LEX) -> str:
    """Terms in descending order as "a^k*X1^i*X2^j", joined by " + "."""
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms(order):
        mono = _fmt_monomial(m)
        if not mono:
            out.append("1" if c.log == 0 else str(c))
        elif c.log == 0:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)


_FACTOR = re.compile(r"^(X1|X2|a)(?:\^\(?(-?\d+)\)?)?$")


def parse_poly(text: str, field: GaloisField) -> Poly:
    """Inverse of :func:`format_poly`; also accepts spaces and repeated monomials."""
    text = text.strip()
    if text in ("", "0"):
        return Poly(field)
    total = Poly(field)
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ValueError(f"empty term in {text!r}")
        coeff = field.one
        exp = [0, 0]
        for factor in term.replace(" ", "").split("*"):
            if factor == "1":
                continue
            if factor == "0":
                coeff = field.zero
                continue
            mt = _FACTOR.match(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            name, e = mt.group(1), int(mt.group(2)) if mt.group(2) is not None else 1
            if name == "a":
                coeff = coeff * field.element(e)
            else:
                if e < 0:
                    raise ValueError(f"negative exponent in {factor!r}")
                exp[0 if name == "X1" else 1] += e
        total = total + Poly(field, {(exp[0], exp[1]): coeff})
    return total


def parse_word(text: str, field: GaloisField, bounds: tuple[int, int]) -> QuotientPoly:
    return parse_poly(text, field).project(bounds)
