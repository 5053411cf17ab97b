"""Splitting a reduced ring along annihilators.

For a in a reduced ring R, R embeds in R/Ann(a) x R/Ann(Ann(a)); in the
first factor a is regular, in the second a is zero.  Iterating over a list
of elements gives 2^n components indexed by the set of elements that
vanish there.  Components are presentations over the same variables with
enlarged ideals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .dimcerts import (ComponentWitness, DimCertificate, _checked, glue_components,
                       search_dim_cert, verify_dim_cert)
from .groebner import Ideal, ideal_quotient, ideal_quotient_ideal, intersection
from .rings import IndicatorPoly, RingElement, RingPresentation, evaluate


@dataclass
class ComponentSplit:
    parent: RingPresentation
    components: list = field(default_factory=list)   # (presentation, frozenset of indices)

    def ideals(self):
        return [Ideal(self.parent.nvars, c.ideal_gens, self.parent.field) for c, _ in self.components]


def _require_reduced(R):
    if not R.assume_reduced:
        raise ValueError("this operation needs a reduced ring (set assume_reduced)")


def annihilator(R: RingPresentation, a) -> Ideal:
    """Ann(a) pulled back to the ambient polynomial ring, i.e. (I : a)."""
    a = R.element(a)
    return ideal_quotient(R.ideal, a.poly)


def annihilator_ideal(R: RingPresentation, J: Ideal) -> Ideal:
    """Ann(J) pulled back, i.e. (I : J)."""
    return ideal_quotient_ideal(R.ideal, J)


def _component(R, J: Ideal) -> RingPresentation:
    return R.with_ideal(J.canonical(), assume_reduced=R.assume_reduced)


def split_at(R: RingPresentation, a) -> ComponentSplit:
    _require_reduced(R)
    a = R.element(a)
    J1 = annihilator(R, a)
    J2 = annihilator_ideal(R, J1)
    split = ComponentSplit(R, [(_component(R, J1), frozenset()), (_component(R, J2), frozenset({0}))])
    if not injective(split):
        raise ValueError("components do not intersect to the parent ideal: the ring is not reduced")
    return split


def injective(split: ComponentSplit) -> bool:
    """The map to the product of components is injective iff the component
    ideals intersect to the parent ideal."""
    ideals = split.ideals()
    if not ideals:
        return False
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersection(acc, J)
    return acc.same_as(split.parent.ideal)


def split_sequence(R: RingPresentation, elements: Sequence) -> ComponentSplit:
    """Components R/a_I with a_I = (Ann(<a_i : i in I>) * prod_{j not in I} a_j)^perp.

    Index sets are 0-based; I is the set of elements that vanish on the
    component.
    """
    _require_reduced(R)
    els = [R.element(a) for a in elements]
    n = len(els)
    comps = []
    for k in range(n + 1):
        for I in itertools.combinations(range(n), k):
            I = frozenset(I)
            if I:
                A = annihilator_ideal(R, Ideal(R.nvars, tuple(els[i].poly for i in sorted(I)), R.field))
            else:
                A = Ideal.unit(R.nvars, R.field)
            prod = R.one
            for j in range(n):
                if j not in I:
                    prod = prod * els[j]
            B = Ideal(R.nvars, tuple(g * prod.poly for g in A.gens), R.field)
            comps.append((_component(R, annihilator_ideal(R, B)), I))
    comps.sort(key=lambda c: (len(c[1]), sorted(c[1])))
    return ComponentSplit(R, comps)


def iterated_split(R: RingPresentation, elements: Sequence) -> ComponentSplit:
    """Split at the first element, then split every component at the next, and so on."""
    _require_reduced(R)
    current = [(R, frozenset())]
    for i, a in enumerate(elements):
        nxt = []
        for S, I in current:
            x = S.element(R.element(a).poly)
            J1 = annihilator(S, x)
            J2 = annihilator_ideal(S, J1)
            nxt.append((_component(S, J1), I))
            nxt.append((_component(S, J2), I | {i}))
        current = nxt
    current.sort(key=lambda c: (len(c[1]), sorted(c[1])))
    return ComponentSplit(R, current)


def same_components(s1: ComponentSplit, s2: ComponentSplit) -> bool:
    """Equal multisets of component ideals."""
    a = sorted(repr(J.canonical()) for J in s1.ideals())
    b = sorted(repr(J.canonical()) for J in s2.ideals())
    return a == b


def classify(S: RingPresentation, x) -> str:
    """'zero', 'regular' or 'neither' for an element of a component."""
    x = S.element(x.poly if isinstance(x, RingElement) else x)
    if x.is_zero():
        return "zero"
    if ideal_quotient(S.ideal, x.poly).same_as(S.ideal):
        return "regular"
    return "neither"


def regular_split_check(split: ComponentSplit, xs: Sequence) -> list:
    out = []
    for S, I in split.components:
        if S.is_trivial():
            out.append({"index": sorted(I), "trivial": True, "classes": ["zero"] * len(xs)})
            continue
        classes = [classify(S, split.parent.element(x)) for x in xs]
        if "neither" in classes:
            i = classes.index("neither")
            raise ValueError(f"element {i} is neither zero nor regular on component {sorted(I)}")
        out.append({"index": sorted(I), "trivial": False, "classes": classes})
    return out


def machinery_no1_dimcert(R: RingPresentation, points: Sequence, order, bound: int,
                          split_on: Sequence | None = None, coeff_bound: int | None = None) -> DimCertificate:
    """Certificate over R assembled from certificates over split components.

    Splitting uses the elements of ``split_on`` (default: the points), skipping
    any that is already zero or regular.  Leaf components get a plain
    search; each binary split is undone by ``glue_components``.
    """
    _require_reduced(R)
    points = [R.element(x) for x in points]
    splitters = [R.element(a) for a in (points if split_on is None else split_on)]
    cert = _machinery(R, R, points, order, bound, splitters, coeff_bound)
    return _checked(DimCertificate(R, tuple(points), order, cert.map_ring(R)))


def _machinery(R, S, points, order, bound, splitters, coeff_bound) -> IndicatorPoly:
    # returns a witness over S (same variables as R) with trailing coefficient 1
    if S.is_trivial():
        return IndicatorPoly.const(S, len(points))
    pts = [S.element(x.poly) for x in points]
    for k, a in enumerate(splitters):
        x = S.element(a.poly)
        kind = classify(S, x)
        if kind != "neither":
            continue
        J1 = annihilator(S, x)
        J2 = annihilator_ideal(S, J1)
        S1, S2 = _component(S, J1), _component(S, J2)
        rest = splitters[k + 1:]
        W1 = _machinery(R, S1, points, order, bound, rest, coeff_bound).map_ring(S)
        W2 = _machinery(R, S2, points, order, bound, rest, coeff_bound).map_ring(S)
        z1 = evaluate(W1, pts)
        z2 = evaluate(W2, pts)
        glued = glue_components(S, pts, order, ComponentWitness(W1, S.zero, z1),
                                ComponentWitness(W2, S.zero, z2))
        return glued.witness
    c = search_dim_cert(S, pts, order, bound, coeff_bound)
    if c is None:
        raise LookupError(f"no certificate within bound {bound} on component {S!r}")
    return c.witness


def reduce_to_component(c: DimCertificate, S: RingPresentation) -> DimCertificate:
    """Restrict a parent certificate to a quotient component."""
    return DimCertificate(S, tuple(S.element(x.poly) for x in c.points), c.order, c.witness.map_ring(S))
