"""Dimension certificates in trailing-coefficient form.

A certificate for points x_0..x_n of R is a polynomial P in indicators
X_0..X_n with coefficients in R such that P(x) = 0 and the coefficient of
the smallest monomial (for a chosen monomial order) is 1.  Under lex this
is the Krull dimension criterion; under graded matrix orders it gives the
dimv predicate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .linalg import Span
from .orders import OrderSpec, grlex, lex, lex_desc
from .polys import Poly, add_exps, lcm_exps, monomials_upto, sub_exps
from .rings import IndicatorPoly, RingElement, RingPresentation, evaluate


class Check(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


@dataclass
class DimCertificate:
    ring: RingPresentation
    points: tuple
    order: OrderSpec
    witness: IndicatorPoly
    trailing: tuple | None = None

    def __post_init__(self):
        self.points = tuple(self.ring.element(x) for x in self.points)
        if self.trailing is None and self.witness.terms:
            self.trailing = min(self.witness.terms, key=self.order.key)

    @property
    def n(self):
        return len(self.points) - 1


@dataclass
class NestedCollapse:
    exponents: tuple
    cofactors: tuple


@dataclass
class ComponentWitness:
    """A witness over R with trailing coefficient 1 + y and evaluation z."""

    witness: IndicatorPoly
    y: RingElement
    z: RingElement


def verify_dim_cert(c: DimCertificate) -> Check:
    P = c.witness
    if P.nvars != len(c.points) or c.order.nvars != P.nvars:
        return Check(False, "shape: indicator count, point count and order dimension differ")
    if P.has_negative_exponents():
        return Check(False, "shape: witness has negative exponents")
    if c.ring.is_trivial():
        # the witness 1 is already 0 here
        return Check(True, "trivial ring: 1 = 0, every certificate holds")
    if P.is_zero():
        raise ValueError("zero witness")
    m = min(P.terms, key=c.order.key)
    if c.trailing is not None and tuple(c.trailing) != m:
        return Check(False, f"trailing: recorded {tuple(c.trailing)} but the minimum is {m}")
    if not P.terms[m].is_one():
        return Check(False, f"trailing coefficient is {P.terms[m]}, not 1")
    value = evaluate(P, list(c.points))
    if not value.is_zero():
        return Check(False, f"evaluation at the points is {value}, not 0")
    return Check(True, "ok")


def expand_nested(nc: NestedCollapse, ring: RingPresentation, points: Sequence) -> DimCertificate:
    """x_0^{e_0}(x_1^{e_1}( ... x_n^{e_n}(1 + c_n x_n) ... ) + c_0 x_0) as a certificate.

    The order is lex with X_0 most significant, for which the trailing
    monomial is X^e.
    """
    e, cs = tuple(nc.exponents), [ring.element(c) for c in nc.cofactors]
    n1 = len(e)
    if len(cs) != n1 or len(points) != n1:
        raise ValueError("exponents, cofactors and points must have equal length")

    def X(i, k=1):
        v = [0] * n1
        v[i] = k
        return tuple(v)

    inner = IndicatorPoly(ring, n1, {(0,) * n1: 1, X(n1 - 1): cs[-1]}).mul_monomial(X(n1 - 1, e[-1]))
    for i in range(n1 - 2, -1, -1):
        inner = (inner + IndicatorPoly(ring, n1, {X(i): cs[i]})).mul_monomial(X(i, e[i]))
    return DimCertificate(ring, tuple(points), lex(n1), inner)


def _zero_slot(points):
    for i, x in enumerate(points):
        if x.is_zero():
            return i
    return None


def search_dim_cert(R: RingPresentation, points: Sequence, order, degree_bound: int,
                    coeff_bound: int | None = None) -> DimCertificate | None:
    """Iterative deepening over the total degree d = 0..degree_bound.

    At level d, each candidate trailing monomial m (|m| <= d) is tried in
    ascending order: the coefficient of X^m is fixed to 1 and the other
    coefficients range over field combinations of standard monomials of R
    of degree <= min(d, coeff_bound).  The first solvable m wins.
    Returns None when nothing is found within the bound.
    """
    points = tuple(R.element(x) for x in points)
    k = len(points)
    if order.nvars != k:
        raise ValueError(f"order has {order.nvars} indicators but there are {k} points")
    if R.is_trivial():
        return _checked(DimCertificate(R, points, order, IndicatorPoly.const(R, k)))
    j = _zero_slot(points)
    if j is not None and degree_bound >= 1:
        return _checked(DimCertificate(R, points, order, IndicatorPoly.var(R, k, j)))
    cb = degree_bound if coeff_bound is None else coeff_bound
    for d in range(degree_bound + 1):
        sol = _search_level(R, points, order, d, min(d, cb))
        if sol is not None:
            return _checked(DimCertificate(R, points, order, sol))
    return None


def _checked(c: DimCertificate) -> DimCertificate:
    v = verify_dim_cert(c)
    if not v:
        raise AssertionError(f"search produced an invalid certificate: {v.reason}")
    return c


def _rowkey(e):
    return (sum(e),) + tuple(e)


def _search_level(R, points, order, d, cd):
    k = len(points)
    key = order.keyfunc()
    monos = sorted(monomials_upto(k, d), key=key)
    basis = [Poly._raw(R.nvars, {b: R.field(1)}, R.field, False) for b in R.standard_monomials(cd)]
    cache = {(0,) * k: R.one}

    def power(alpha):
        v = cache.get(alpha)
        if v is None:
            i = next(i for i, a in enumerate(alpha) if a)
            prev = list(alpha)
            prev[i] -= 1
            v = cache[alpha] = power(tuple(prev)) * points[i]
        return v

    span = Span(R.field, _rowkey)
    found = None
    for m in reversed(monos):
        u = span.solve_negated(power(m).poly.terms)
        if u is not None:
            found = (m, u)
        pm = power(m).poly
        for bi, b in enumerate(basis):
            span.add((m, bi), R.reduce(b * pm).terms)
    if found is None:
        return None
    m, u = found
    coeffs: dict = {m: Poly.one(R.nvars, R.field)}
    for (alpha, bi), c in u.items():
        term = basis[bi].scale(c)
        coeffs[alpha] = coeffs[alpha] + term if alpha in coeffs else term
    return IndicatorPoly(R, k, coeffs)


def lift_from_reduced(c: DimCertificate, R: RingPresentation, N: int, points: Sequence | None = None) -> DimCertificate:
    """From a certificate over R_red (same variables, larger ideal) to one over R.

    ``points`` are the points in R (their normal forms over R_red may have
    lost information); by default the certificate's points are read in R.
    The witness is reinterpreted over R and raised to the power N, which is
    enough when its value in R is nilpotent of index <= N.
    """
    if N < 1:
        raise ValueError("nilpotency exponent must be at least 1")
    if c.ring.vars != R.vars:
        raise ValueError("R and R_red must share their variables")
    if points is None:
        pts = tuple(RingElement(R, x.poly) for x in c.points)
    else:
        pts = tuple(R.element(x) for x in points)
        if len(pts) != len(c.points) or any(c.ring.element(x.poly) != y for x, y in zip(pts, c.points)):
            raise ValueError("the points do not map to the certificate's points in R_red")
    P = c.witness.map_ring(R)
    value = evaluate(P, list(pts))
    if not (value ** N).is_zero():
        raise ValueError(f"value {value} of the witness is not nilpotent of index {N} in R")
    out = DimCertificate(R, pts, c.order, P ** N)
    return _checked(out)


def _trailing(P: IndicatorPoly, order):
    m = min(P.terms, key=order.key)
    return m, P.terms[m]


def glue_components(R: RingPresentation, points: Sequence, order, c1: ComponentWitness,
                    c2: ComponentWitness) -> DimCertificate:
    """Combine witnesses living over the two halves of a split.

    With y1, z1 in an ideal J and y2, z2 in an ideal K with J K = 0, the
    trailing monomials are first aligned to their lcm, then
    Q1 = P1 - y1 P2 and Q2 = P2 - y2 P1 both have trailing coefficient 1
    and Q1 Q2 vanishes at the points.
    """
    points = tuple(R.element(x) for x in points)
    y1, z1, y2, z2 = (R.element(v) for v in (c1.y, c1.z, c2.y, c2.z))
    for name, prod in (("y1*y2", y1 * y2), ("y1*z2", y1 * z2), ("z1*y2", z1 * y2), ("z1*z2", z1 * z2)):
        if not prod.is_zero():
            raise ValueError(f"orthogonality fails: {name} = {prod}")
    P1, P2 = c1.witness, c2.witness
    for P, y, z, name in ((P1, y1, z1, "first"), (P2, y2, z2, "second")):
        m, c = _trailing(P, order)
        if c != 1 + y:
            raise ValueError(f"{name} witness has trailing coefficient {c}, expected 1 + ({y})")
        if evaluate(P, list(points)) != z:
            raise ValueError(f"{name} witness does not evaluate to the stated z")
    m1, _ = _trailing(P1, order)
    m2, _ = _trailing(P2, order)
    m = lcm_exps(m1, m2)
    P1 = P1.mul_monomial(sub_exps(m, m1))
    P2 = P2.mul_monomial(sub_exps(m, m2))
    Q1 = P1 - P2.scale(y1)
    Q2 = P2 - P1.scale(y2)
    return _checked(DimCertificate(R, points, order, Q1 * Q2))


def order_independence(c: DimCertificate, o2: OrderSpec, bound: int) -> dict:
    if not o2.graded():
        raise ValueError("the comparison order must be graded")
    found = search_dim_cert(c.ring, c.points, o2, bound)
    escalated = False
    if found is None:
        escalated = True
        found = search_dim_cert(c.ring, c.points, o2, 2 * bound)
    return {"first_order": str(c.order), "second_order": str(o2), "found_first": True,
            "found_second": found is not None, "escalated": escalated,
            "agree": found is not None, "certificate": found}


def dimv_leq_sampled(R: RingPresentation, n: int, sample_tuples, order=None, bound: int = 6,
                     coeff_bound: int | None = None) -> dict:
    """Search certificates for sampled (n+1)-tuples; the report never claims the forall."""
    order = order or grlex(n + 1)
    rows = []
    for tup in sample_tuples:
        if len(tup) != n + 1:
            raise ValueError(f"tuple of length {len(tup)}, expected {n + 1}")
        c = search_dim_cert(R, tup, order, bound, coeff_bound)
        rows.append({"points": [str(R.element(x)) for x in tup], "found": c is not None, "certificate": c})
    ok = all(r["found"] for r in rows)
    if R.is_trivial():
        verdict = "trivial ring: dimension -1"
    elif ok:
        verdict = f"consistent with dimension <= {n} at bound {bound} on {len(rows)} sampled tuples"
    else:
        verdict = f"no certificate within bound {bound} for some sampled tuple"
    return {"n": n, "bound": bound, "order": str(order), "results": rows, "consistent": ok, "verdict": verdict}


def polynomial_extension(R: RingPresentation, n: int) -> RingPresentation:
    names = []
    i = 1
    while len(names) < n:
        cand = f"X{i}"
        if cand not in R.vars:
            names.append(cand)
        i += 1
    return R.extend(names)


def vdim_leq_sampled(R: RingPresentation, n: int, sample_tuples, bound: int = 6,
                     order=None) -> dict:
    """vdim R <= n tested as Kdim R[X_1..X_n] <= 2n on sampled (2n+1)-tuples."""
    Rx = polynomial_extension(R, n)
    order = order or lex_desc(2 * n + 1)
    tuples = [[Rx.element(x) for x in t] for t in sample_tuples]
    rep = dimv_leq_sampled(Rx, 2 * n, tuples, order, bound)
    rep["extension"] = Rx
    if R.is_trivial():
        rep["verdict"] = "trivial ring: vdim = -1"
    elif rep["consistent"]:
        rep["verdict"] = (f"consistent with vdim <= {n}: Kdim of the {n}-variable extension <= {2 * n} "
                          f"at bound {bound} on {len(tuples)} sampled tuples")
    return rep
