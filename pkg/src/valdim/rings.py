"""Finitely presented algebras k[vars]/I, their elements and fractions.

Elements are kept in Groebner normal form with respect to the grlex basis
of I, so equality is equality of normal forms.  ``IndicatorPoly`` is a
polynomial in fresh indicator variables X_0..X_n whose coefficients are
ring elements; exponents may be negative (Laurent) where a construction
needs it.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import QQ, FieldSpec
from .groebner import GroebnerBasis, Ideal
from .polys import Poly, monomials_upto, parse_poly, divides

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingPresentation:
    def __init__(self, vars: Sequence[str], ideal_gens: Iterable = (), field: FieldSpec = QQ,
                 assume_reduced: bool = False, assume_integral: bool = False):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError("ring variables must be distinct")
        for v in vars:
            if not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        gens = []
        for g in ideal_gens:
            if isinstance(g, str):
                g = parse_poly(g, vars, field)
            if not isinstance(g, Poly) or g.nvars != len(vars) or g.field != field:
                raise ValueError("ideal generator does not live in the ambient ring")
            if g.laurent and any(a < 0 for e in g.terms for a in e):
                raise ValueError("ideal generators must be ordinary polynomials")
            gens.append(Poly._raw(g.nvars, g.terms, field, False))
        self.vars = vars
        self.field = field
        self.ideal_gens = tuple(g for g in gens if g.terms)
        self.assume_reduced = bool(assume_reduced)
        self.assume_integral = bool(assume_integral)
        self._ideal = Ideal(len(vars), self.ideal_gens, field)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def ideal(self) -> Ideal:
        return self._ideal

    @property
    def gb(self) -> GroebnerBasis:
        return self._ideal.groebner()

    def is_trivial(self) -> bool:
        return self.gb.is_unit()

    def reduce(self, p: Poly) -> Poly:
        return self.gb.normal_form(p)

    # element construction ----------------------------------------------
    def poly(self, text: str) -> Poly:
        return parse_poly(text, self.vars, self.field)

    def element(self, x) -> "RingElement":
        if isinstance(x, RingElement):
            if x.ring is self or x.ring == self:
                return x
            raise ValueError("element belongs to a different ring")
        if isinstance(x, str):
            x = self.poly(x)
        elif isinstance(x, (int, Fraction)):
            x = Poly.const(self.nvars, x, self.field)
        if not isinstance(x, Poly) or x.nvars != self.nvars:
            raise ValueError(f"cannot build a ring element from {x!r}")
        return RingElement(self, x)

    def __call__(self, x) -> "RingElement":
        return self.element(x)

    def frac(self, num, den=1) -> "FracElement":
        return FracElement(self.element(num), self.element(den))

    @property
    def one(self):
        return self.element(1)

    @property
    def zero(self):
        return self.element(0)

    def var(self, name: str):
        return self.element(Poly.var(self.nvars, self.vars.index(name), self.field))

    def standard_monomials(self, d: int) -> list:
        """Monomials of degree <= d not divisible by a leading monomial of the basis."""
        if self.is_trivial():
            return []
        lms = self.gb.leading_monomials()
        mons = [m for m in monomials_upto(self.nvars, d) if not any(divides(l, m) for l in lms)]
        return sorted(mons, key=lambda e: (sum(e), e))

    # derived presentations ---------------------------------------------
    def quotient(self, extra: Iterable[Poly], **flags) -> "RingPresentation":
        return RingPresentation(self.vars, tuple(self.ideal_gens) + tuple(extra), self.field,
                                flags.get("assume_reduced", self.assume_reduced),
                                flags.get("assume_integral", False))

    def with_ideal(self, gens: Iterable[Poly], **flags) -> "RingPresentation":
        return RingPresentation(self.vars, gens, self.field,
                                flags.get("assume_reduced", self.assume_reduced),
                                flags.get("assume_integral", False))

    def extend(self, new_vars: Sequence[str], **flags) -> "RingPresentation":
        """Presentation of R[new_vars] (same ideal, fresh variables appended)."""
        n = self.nvars
        total = n + len(new_vars)
        gens = [g.embed(total, list(range(n))) for g in self.ideal_gens]
        return RingPresentation(self.vars + tuple(new_vars), gens, self.field,
                                flags.get("assume_reduced", self.assume_reduced),
                                flags.get("assume_integral", self.assume_integral))

    def lift(self, x: "RingElement") -> "RingElement":
        """Reinterpret an element of a presentation over the same variables."""
        if x.ring.vars != self.vars:
            raise ValueError("presentations have different variables")
        return RingElement(self, x.poly)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return (self.vars == other.vars and self.field == other.field
                and self.ideal_gens == other.ideal_gens
                and self.assume_reduced == other.assume_reduced
                and self.assume_integral == other.assume_integral)

    def __hash__(self):
        return hash((self.vars, self.field, self.ideal_gens))

    def __repr__(self):
        gens = ", ".join(g.to_str(self.vars) for g in self.ideal_gens)
        base = f"{self.field}[{', '.join(self.vars)}]"
        return base + (f"/<{gens}>" if gens else "")


class RingElement:
    __slots__ = ("ring", "poly", "_hash")

    def __init__(self, ring: RingPresentation, poly: Poly, reduced: bool = False):
        self.ring = ring
        self.poly = poly if reduced else ring.reduce(poly)
        self._hash = None

    def _other(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, other.poly - self.poly)

    def __neg__(self):
        return RingElement(self.ring, -self.poly, reduced=True)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a ring element")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not self.poly.terms

    def is_one(self) -> bool:
        return self.poly == 1

    def __bool__(self):
        return bool(self.poly.terms)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return (other.ring is self.ring or other.ring == self.ring) and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == other
        if isinstance(other, FracElement):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.poly)
        return self._hash

    def __str__(self):
        return self.poly.to_str(self.ring.vars)

    def __repr__(self):
        return f"RingElement({self})"


class FracElement:
    """num/den in Frac R; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: RingElement, den: RingElement | None = None):
        if den is None:
            den = num.ring.one
        if isinstance(den, (int, Fraction)):
            den = num.ring.element(den)
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        if den.ring is not num.ring and den.ring != num.ring:
            raise ValueError("numerator and denominator from different rings")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def of(cls, x) -> "FracElement":
        if isinstance(x, FracElement):
            return x
        return cls(x, x.ring.one)

    def _other(self, other):
        if isinstance(other, FracElement):
            return other
        if isinstance(other, RingElement):
            return FracElement(other, other.ring.one)
        if isinstance(other, (int, Fraction)):
            return FracElement(self.ring.element(other), self.ring.one)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FracElement(self.num + o.num, self.den)
        return FracElement(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FracElement(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FracElement(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FracElement":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FracElement(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FracElement(self.num ** k, self.den ** k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_ring_element(self):
        """The element of R when the denominator is 1, else None."""
        if self.den.is_one():
            return self.num
        return None

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # cross-multiplication equality admits no cheap canonical form
        return hash(self.ring.vars)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"FracElement({self})"


def frac_text(ring: RingPresentation, num: str, den: str = "1") -> FracElement:
    return FracElement(ring.element(num), ring.element(den))


class IndicatorPoly:
    """Polynomial in indicators X_0..X_{n-1} with RingElement coefficients."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: RingPresentation, nvars: int, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise ValueError("indicator exponent of the wrong length")
            c = ring.element(c)
            if not c.is_zero():
                clean[e] = c
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _raw(cls, ring, nvars, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, ring, e, c=1):
        return cls(ring, len(e), {tuple(e): c})

    @classmethod
    def const(cls, ring, nvars, c=1):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, ring, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(ring, nvars, {tuple(e): 1})

    @classmethod
    def from_poly(cls, ring, p: Poly):
        """Interpret a field-coefficient polynomial as an indicator polynomial."""
        zero = (0,) * ring.nvars
        return cls(ring, p.nvars, {e: Poly(ring.nvars, {zero: c}, ring.field) for e, c in p.terms.items()})

    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ring.zero)

    def has_negative_exponents(self):
        return any(a < 0 for e in self.terms for a in e)

    def _combine(self, other, sign):
        if not isinstance(other, IndicatorPoly) or other.nvars != self.nvars:
            raise ValueError("indicator polynomials of different shapes")
        out = dict(self.terms)
        for e, c in other.terms.items():
            if sign < 0:
                c = -c
            v = out[e] + c if e in out else c
            if v.is_zero():
                out.pop(e, None)
            else:
                out[e] = v
        return IndicatorPoly._raw(self.ring, self.nvars, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return IndicatorPoly._raw(self.ring, self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (RingElement, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, IndicatorPoly) or other.nvars != self.nvars:
            raise ValueError("indicator polynomials of different shapes")
        acc: dict = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                acc[g] = acc[g] + c * d if g in acc else c * d
        return IndicatorPoly._raw(self.ring, self.nvars, {e: c for e, c in acc.items() if not c.is_zero()})

    def scale(self, c):
        c = self.ring.element(c)
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if not w.is_zero():
                out[e] = w
        return IndicatorPoly._raw(self.ring, self.nvars, out)

    def mul_monomial(self, e):
        return IndicatorPoly._raw(self.ring, self.nvars,
                                  {tuple(a + b for a, b in zip(f, e)): c for f, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of an indicator polynomial")
        result = IndicatorPoly.const(self.ring, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def map_ring(self, target: RingPresentation):
        """Reinterpret coefficient normal forms in another presentation on the same variables."""
        return IndicatorPoly(target, self.nvars, {e: RingElement(target, c.poly) for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, IndicatorPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset((e, c.poly) for e, c in self.terms.items())))

    def to_str(self, names=None):
        names = names or [f"X{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            mono = "*".join(f"{n}^{a}" if a != 1 else n for n, a in zip(names, e) if a)
            c = str(self.terms[e])
            if not mono:
                parts.append(f"({c})")
            elif c == "1":
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"IndicatorPoly({self.to_str()})"


def evaluate(P: IndicatorPoly, points: Sequence):
    """Substitute the points for the indicators.

    Returns a RingElement when every point is a RingElement and no exponent
    is negative, otherwise a FracElement whose denominator is a product of
    powers of the point denominators (and of numerators for negative
    exponents).
    """
    if len(points) != P.nvars:
        raise ValueError(f"{P.nvars} indicators but {len(points)} points")
    R = P.ring
    plain = all(isinstance(x, RingElement) for x in points) and not P.has_negative_exponents()
    if plain:
        total = R.zero
        powers = [{} for _ in points]
        for e, c in P.terms.items():
            v = c
            for i, a in enumerate(e):
                if a:
                    pw = powers[i].get(a)
                    if pw is None:
                        pw = powers[i][a] = points[i] ** a
                    v = v * pw
            total = total + v
        return total
    fr = [FracElement.of(R.element(x) if not isinstance(x, FracElement) else x) for x in points]
    pos = [max([0] + [e[i] for e in P.terms]) for i in range(P.nvars)]
    neg = [max([0] + [-e[i] for e in P.terms]) for i in range(P.nvars)]
    for i, x in enumerate(fr):
        if neg[i] and x.num.is_zero():
            raise ZeroDivisionError(f"negative power of point {i}, which is zero")
    den = R.one
    for i, x in enumerate(fr):
        den = den * x.den ** pos[i] * x.num ** neg[i]
    num = R.zero
    cache = {}

    def pw(i, which, k):
        key = (i, which, k)
        if key not in cache:
            base = fr[i].num if which == 0 else fr[i].den
            cache[key] = base ** k
        return cache[key]

    for e, c in P.terms.items():
        v = c
        for i, a in enumerate(e):
            v = v * pw(i, 0, neg[i] + a) * pw(i, 1, pos[i] - a)
        num = num + v
    return FracElement(num, den)
