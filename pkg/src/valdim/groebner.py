"""Buchberger's algorithm and the ideal operations built on it.

Bases are reduced and monic, and S-pairs are selected by the sugar
strategy with a fixed tie-break, so the output depends only on the input
list and the order.  Ideals are generator tuples; operations that produce
new ideals return their reduced grlex basis.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .fields import QQ, FieldSpec
from .orders import EliminationOrder, OrderSpec, grlex
from .polys import Poly, divides, lcm_exps, sub_exps


def _negkey(key):
    return tuple(-k for k in key)


def _monic(terms: dict, lm, fld: FieldSpec) -> dict:
    c = terms[lm]
    if c == 1:
        return terms
    inv = fld.inv(c)
    mod = fld.p
    if mod:
        return {e: (v * inv) % mod for e, v in terms.items()}
    return {e: v * inv for e, v in terms.items()}


class _Elem:
    __slots__ = ("lm", "terms", "tail", "sugar")

    def __init__(self, terms, lm, sugar):
        self.terms = terms
        self.lm = lm
        self.tail = [(e, c) for e, c in terms.items() if e != lm]
        self.sugar = sugar


def _reduce(terms: dict, basis: Sequence[_Elem], key, fld: FieldSpec, full=True) -> dict:
    """Normal form of ``terms`` modulo monic ``basis`` (full reduction by default)."""
    mod = fld.p
    p = dict(terms)
    out = {}
    heap = [(_negkey(key(e)), e) for e in p]
    heapq.heapify(heap)
    queued = set(p)
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        g = None
        for b in basis:
            if divides(b.lm, m):
                g = b
                break
        if g is None:
            out[m] = c
            if not full:
                out.update(p)
                return out
            continue
        q = sub_exps(m, g.lm)
        for e, d in g.tail:
            e2 = tuple(a + b for a, b in zip(e, q))
            v = p.get(e2, 0) - c * d
            if mod:
                v %= mod
            if v:
                p[e2] = v
                if e2 not in queued:
                    heapq.heappush(heap, (_negkey(key(e2)), e2))
                    queued.add(e2)
            else:
                p.pop(e2, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    order: object
    gens: tuple
    nvars: int
    field: FieldSpec = QQ
    _elems: list = dc_field(default=None, compare=False, repr=False, hash=False)

    def _basis(self):
        if self._elems is None:
            key = self.order.key
            elems = []
            for g in self.gens:
                lm = max(g.terms, key=key)
                elems.append(_Elem(g.terms, lm, sum(lm)))
            object.__setattr__(self, "_elems", elems)
        return self._elems

    def normal_form(self, f: Poly) -> Poly:
        if f.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        if f.laurent and any(a < 0 for e in f.terms for a in e):
            raise ValueError("Laurent polynomials do not enter ideal computations")
        if not f.terms:
            return f
        terms = _reduce(f.terms, self._basis(), self.order.keyfunc(), self.field)
        return Poly._raw(self.nvars, terms, self.field, False)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f).terms

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_constant() and bool(self.gens[0].terms)

    def leading_monomials(self):
        return [b.lm for b in self._basis()]


def buchberger(gens: Sequence[Poly], o, nvars: int | None = None,
               field: FieldSpec | None = None) -> GroebnerBasis:
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    if field is None:
        field = gens[0].field if gens else QQ
    if o.nvars != nvars:
        raise ValueError(f"order dimension {o.nvars} does not match {nvars} variables")
    for g in gens:
        if g.nvars != nvars or g.field != field:
            raise ValueError("generators must share variable count and field")
        if any(a < 0 for e in g.terms for a in e):
            raise ValueError("Laurent polynomials do not enter ideal computations")
    key = o.keyfunc()
    one = (0,) * nvars

    G: list[_Elem] = []
    pairs = []  # heap of (sugar, negkey-free lcm key, i, j)
    live = set()

    def add(terms, sugar):
        lm = max(terms, key=key)
        terms = _monic(terms, lm, field)
        el = _Elem(terms, lm, sugar)
        j = len(G)
        G.append(el)
        for i in range(j):
            if G[i] is None:
                continue
            l = lcm_exps(G[i].lm, lm)
            s = max(G[i].sugar + sum(l) - sum(G[i].lm), sugar + sum(l) - sum(lm))
            heapq.heappush(pairs, (s, key(l), i, j))
            live.add((i, j))
        return lm

    unit = False
    for g in gens:
        if not g.terms:
            continue
        r = _reduce(g.terms, [e for e in G if e is not None], key, field)
        if not r:
            continue
        if one in r and len(r) == 1:
            unit = True
            break
        add(r, g.total_degree())

    while pairs and not unit:
        s, _, i, j = heapq.heappop(pairs)
        live.discard((i, j))
        gi, gj = G[i], G[j]
        l = lcm_exps(gi.lm, gj.lm)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(gi.lm, gj.lm)):
            continue
        # chain criterion
        skip = False
        for k, gk in enumerate(G):
            if k in (i, j) or not divides(gk.lm, l):
                continue
            if (min(i, k), max(i, k)) not in live and (min(j, k), max(j, k)) not in live:
                skip = True
                break
        if skip:
            continue
        mod = field.p
        qi, qj = sub_exps(l, gi.lm), sub_exps(l, gj.lm)
        sp = {}
        for e, c in gi.terms.items():
            sp[tuple(a + b for a, b in zip(e, qi))] = c
        for e, c in gj.terms.items():
            e2 = tuple(a + b for a, b in zip(e, qj))
            v = sp.get(e2, 0) - c
            if mod:
                v %= mod
            if v:
                sp[e2] = v
            else:
                sp.pop(e2, None)
        r = _reduce(sp, G, key, field)
        if not r:
            continue
        if one in r and len(r) == 1:
            unit = True
            break
        add(r, s)

    if unit:
        return GroebnerBasis(o, (Poly.one(nvars, field),), nvars, field)
    return GroebnerBasis(o, tuple(_interreduce(G, key, field, nvars)), nvars, field)


def _interreduce(G, key, field, nvars):
    elems = sorted(G, key=lambda el: key(el.lm))
    kept = []
    for el in elems:
        if not any(divides(k.lm, el.lm) for k in kept):
            kept.append(el)
    out = []
    for idx, el in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        tail = _reduce({e: c for e, c in el.tail}, others, key, field)
        terms = dict(tail)
        terms[el.lm] = el.terms[el.lm]
        terms = _monic(terms, el.lm, field)
        out.append(Poly._raw(nvars, terms, field, False))
    return out


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    return G.normal_form(f)


def ideal_member(f: Poly, G: GroebnerBasis) -> bool:
    return G.contains(f)


# ideals -----------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """An ideal of k[x_0..x_{n-1}] given by generators."""

    nvars: int
    gens: tuple = ()
    field: FieldSpec = QQ
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g.terms)
        for g in gens:
            if g.nvars != self.nvars or g.field != self.field:
                raise ValueError("generator does not belong to this polynomial ring")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, gens: Sequence[Poly], nvars: int | None = None, field: FieldSpec | None = None):
        gens = list(gens)
        if nvars is None:
            nvars = gens[0].nvars
        if field is None:
            field = gens[0].field if gens else QQ
        return cls(nvars, tuple(gens), field)

    @classmethod
    def unit(cls, nvars, field=QQ):
        return cls(nvars, (Poly.one(nvars, field),), field)

    def groebner(self, o=None) -> GroebnerBasis:
        if o is None:
            o = grlex(self.nvars) if self.nvars else None
        if o is None:
            # zero variables: the field itself
            unit = any(g.terms for g in self.gens)
            gens = (Poly.one(0, self.field),) if unit else ()
            return GroebnerBasis(_NullOrder(), gens, 0, self.field)
        gb = self._cache.get(o)
        if gb is None:
            gb = self._cache[o] = buchberger(self.gens, o, self.nvars, self.field)
        return gb

    def canonical(self) -> tuple:
        """Reduced grlex basis, a canonical description of the ideal."""
        return self.groebner().gens

    def contains(self, f: Poly) -> bool:
        return self.groebner().contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def same_as(self, other: "Ideal") -> bool:
        return self.canonical() == other.canonical()

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def add(self, *polys: Poly) -> "Ideal":
        return Ideal(self.nvars, self.gens + tuple(polys), self.field)

    def reduced(self) -> "Ideal":
        return Ideal(self.nvars, self.canonical(), self.field)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.nvars, self.gens + other.gens, self.field)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.nvars, tuple(f * g for f in self.gens for g in other.gens), self.field)


class _NullOrder:
    nvars = 0

    def key(self, e):
        return ()

    def keyfunc(self):
        return self.key


def _as_ideal(I, nvars=None, field=None) -> Ideal:
    if isinstance(I, Ideal):
        return I
    if isinstance(I, GroebnerBasis):
        return Ideal(I.nvars, I.gens, I.field)
    return Ideal.of(I, nvars, field)


def elimination(I: Ideal, k: int) -> Ideal:
    """I intersected with k[x_k..x_{n-1}], as an ideal in the remaining variables."""
    I = _as_ideal(I)
    n = I.nvars
    gb = buchberger(I.gens, EliminationOrder(n, k), n, I.field)
    keep = [g.drop_leading(k) for g in gb.gens if not any(any(e[:k]) for e in g.terms)]
    return Ideal(n - k, tuple(keep), I.field).reduced()


def _shift(I: Ideal, extra: int) -> list:
    # prepend `extra` fresh variables
    return [g.embed(I.nvars + extra, list(range(extra, I.nvars + extra))) for g in I.gens]


def intersection(I, J) -> Ideal:
    I, J = _as_ideal(I), _as_ideal(J)
    if I.nvars != J.nvars:
        raise ValueError("variable count mismatch")
    n = I.nvars
    if I.is_zero() or J.is_zero():
        return Ideal(n, (), I.field)
    t = Poly.var(n + 1, 0, I.field)
    gens = [t * g for g in _shift(I, 1)] + [(1 - t) * g for g in _shift(J, 1)]
    return elimination(Ideal(n + 1, tuple(gens), I.field), 1)


def exact_divide(g: Poly, f: Poly) -> Poly:
    """g / f when f divides g exactly; raises otherwise."""
    o = grlex(g.nvars) if g.nvars else None
    if o is None:
        return g.scale(g.field.inv(f.constant_coeff()))
    key = o.key
    lf = max(f.terms, key=key)
    cf = f.terms[lf]
    q = Poly.zero(g.nvars, g.field)
    r = g
    while r.terms:
        lr = max(r.terms, key=key)
        if not divides(lf, lr):
            raise ValueError("polynomial division is not exact")
        m = sub_exps(lr, lf)
        c = g.field.div(r.terms[lr], cf)
        q = q + Poly._raw(g.nvars, {m: c}, g.field, False)
        r = r - f.mul_term(m, c)
    return q


def ideal_quotient(I, f: Poly) -> Ideal:
    """(I : f) = {g : g f in I}."""
    I = _as_ideal(I)
    if not f.terms:
        return Ideal.unit(I.nvars, I.field)
    if I.is_zero():
        return Ideal(I.nvars, (), I.field)
    K = intersection(I, Ideal(I.nvars, (f,), I.field))
    return Ideal(I.nvars, tuple(exact_divide(g, f) for g in K.gens), I.field).reduced()


def ideal_quotient_ideal(I, J) -> Ideal:
    """(I : J) as the intersection of the (I : f_j) over generators of J."""
    I, J = _as_ideal(I), _as_ideal(J)
    result = None
    for g in J.gens:
        Q = ideal_quotient(I, g)
        result = Q if result is None else intersection(result, Q)
    if result is None:
        return Ideal.unit(I.nvars, I.field)
    return result


def saturation(I, f: Poly) -> Ideal:
    """(I : f^infinity) via elimination of s from I + <1 - s f>."""
    I = _as_ideal(I)
    if not f.terms:
        raise ValueError("saturation by the zero polynomial")
    n = I.nvars
    s = Poly.var(n + 1, 0, I.field)
    fs = f.embed(n + 1, list(range(1, n + 1)))
    gens = _shift(I, 1) + [1 - s * fs]
    return elimination(Ideal(n + 1, tuple(gens), I.field), 1)


def radical_member(f: Poly, I) -> bool:
    """f in sqrt(I), decided by 1 in I + <1 - t f> with t fresh."""
    I = _as_ideal(I, f.nvars, f.field)
    if not f.terms:
        return True
    n = I.nvars
    t = Poly.var(n + 1, n, I.field)
    gens = [g.embed(n + 1, list(range(n))) for g in I.gens]
    gens.append(1 - t * f.embed(n + 1, list(range(n))))
    return buchberger(gens, grlex(n + 1), n + 1, I.field).is_unit()


def radical_exponent(f: Poly, I, max_m: int = 64):
    """Least m <= max_m with f^m in I, or None."""
    I = _as_ideal(I, f.nvars, f.field)
    gb = I.groebner()
    if not f.terms:
        return 1
    p = f
    for m in range(1, max_m + 1):
        if gb.contains(p):
            return m
        p = gb.normal_form(p * f)
    return None
