"""The Zariski lattice of R = k[X]/I as an entailment oracle.

The meet of the atoms in A lies below the join of those in B iff the product
of A lies in the radical of I + <B>; the test runs in the ambient ring.
"""
from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, radical_exponent, radical_member
from .lattices import EntailmentOracle, LatticeTerm, leq, proved, refuted
from .rings import RingElement, RingPresentation


@dataclass(frozen=True)
class ZariskiAtom:
    element: RingElement

    def __str__(self):
        return f"D({self.element})"


@dataclass(frozen=True)
class RadicalCertificate:
    """(prod A)^exponent lies in I + <B>; exponent is None when only the
    Rabinowitsch test was run."""

    exponent: int | None


def _elements(atoms, R):
    out = []
    for a in atoms:
        x = a.element if isinstance(a, ZariskiAtom) else a
        out.append(R.element(x))
    return out


def zariski_entails(A, B, R: RingPresentation):
    prod = R.one
    for x in _elements(A, R):
        prod = prod * x
    rhs = [x.poly for x in _elements(B, R)]
    J = Ideal(R.nvars, R.ideal_gens + tuple(rhs), R.field)
    if not radical_member(prod.poly, J):
        return refuted()
    return proved(RadicalCertificate(radical_exponent(prod.poly, J, 16)))


class ZariskiOracle(EntailmentOracle):
    domain = "zariski"

    def __init__(self, R: RingPresentation):
        self.R = R
        self._memo = {}

    def decide(self, A, B):
        key = (frozenset(A), frozenset(B))
        if key not in self._memo:
            self._memo[key] = zariski_entails(A, B, self.R)
        return self._memo[key]

    def check(self, A, B, evidence):
        if not isinstance(evidence, RadicalCertificate) or evidence.exponent is None:
            return False
        prod = self.R.one
        for x in _elements(A, self.R):
            prod = prod * x
        J = Ideal(self.R.nvars, self.R.ideal_gens + tuple(x.poly for x in _elements(B, self.R)),
                  self.R.field)
        return J.contains((prod ** evidence.exponent).poly)


def D(x) -> LatticeTerm:
    return LatticeTerm.atom(ZariskiAtom(x))


def joyal_relations_check(R: RingPresentation, samples) -> dict:
    """Check D(0) = 0, D(1) = 1, D(x+y) <= D(x) v D(y), D(xy) = D(x) ^ D(y)."""
    o = ZariskiOracle(R)
    bottom, top = LatticeTerm.bottom(), LatticeTerm.top()
    report = {"D(0)=0": leq(D(R.zero), bottom, o).proved,
              "D(1)=1": leq(top, D(R.one), o).proved,
              "sum": True, "product": True, "failures": []}
    for x, y in samples:
        x, y = R.element(x), R.element(y)
        if not leq(D(x + y), D(x) | D(y), o).proved:
            report["sum"] = False
            report["failures"].append(("sum", str(x), str(y)))
        xy = D(x * y)
        both = D(x) & D(y)
        if not (leq(xy, both, o).proved and leq(both, xy, o).proved):
            report["product"] = False
            report["failures"].append(("product", str(x), str(y)))
    report["ok"] = report["D(0)=0"] and report["D(1)=1"] and report["sum"] and report["product"]
    return report
