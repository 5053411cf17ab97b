"""The valuative lattice over V' atoms and the chain construction.

V'(y_1), ..., V'(y_m) |- V'(x_1) or ... or V'(x_n) holds iff
    y_1^p_1 ... y_m^p_m = x_1 P_1(x, y) + ... + x_n P_n(x, y)
for R-polynomials P_j whose exponents in the Y's are <= p.  A ValCert is
such an identity; the oracle checks stored certificates and otherwise runs
a bounded linear search.  The second half turns a lex dimension
certificate for x_0..x_n into a complementary chain of V' terms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .dimcerts import Check, DimCertificate, search_dim_cert
from .groebner import Ideal, saturation
from .lattices import (ComplementaryChain, EntailmentOracle, LatticeTerm, check_complementary,
                       proved, unknown)
from .linalg import Span
from .orders import lex_desc
from .polys import Poly, monomials_upto
from .rings import FracElement, IndicatorPoly, RingElement, RingPresentation, evaluate

VPRIME = "vprime"
VR = "vr"


def as_frac(R: RingPresentation, x) -> FracElement:
    if isinstance(x, FracElement):
        return x
    if isinstance(x, VAtom):
        return x.value
    return FracElement.of(R.element(x))


class VAtom:
    """The atom V'(value) for value in Frac R."""

    __slots__ = ("value",)

    def __init__(self, value: FracElement):
        self.value = value

    def is_zero(self):
        return self.value.is_zero()

    def __eq__(self, other):
        return isinstance(other, VAtom) and self.value == other.value

    def __hash__(self):
        return hash(("V'", self.value.ring.vars))

    def __repr__(self):
        return f"V'({self.value})"


def V(R: RingPresentation, x) -> LatticeTerm:
    return LatticeTerm.atom(VAtom(as_frac(R, x)))


@dataclass(frozen=True)
class ZeroAtom:
    """Evidence that a left atom is V'(0), which entails bottom."""

    atom: VAtom


@dataclass
class ValCert:
    """y^p = sum_j x_j P_j(x, y) (form vprime) or y^p = Q(x, y) (form vr).

    ``left`` holds the y's with exponents ``exps``; ``right`` the x's.  The
    polynomials are in indicators ordered right atoms first, then left.
    """

    form: str
    left: tuple
    exps: tuple
    right: tuple
    polys: tuple

    def __post_init__(self):
        self.left, self.exps, self.right, self.polys = (tuple(self.left), tuple(self.exps),
                                                         tuple(self.right), tuple(self.polys))


def _require_integral(R):
    if not R.assume_integral:
        raise ValueError("valuative computations need an integral ring (set assume_integral)")


def verify_val_cert(c: ValCert, R: RingPresentation) -> Check:
    _require_integral(R)
    if len(c.exps) != len(c.left) or any(int(p) != p or p < 0 for p in c.exps):
        raise ValueError("exponents must be nonnegative integers, one per left atom")
    nx, ny = len(c.right), len(c.left)
    if c.form == VPRIME:
        if len(c.polys) != nx:
            return Check(False, f"{len(c.polys)} polynomials for {nx} right atoms")
    elif c.form == VR:
        if len(c.polys) != 1:
            return Check(False, "the vr form carries exactly one polynomial")
    else:
        raise ValueError(f"unknown certificate form {c.form!r}")
    for k, P in enumerate(c.polys):
        if P.nvars != nx + ny:
            return Check(False, f"polynomial {k} has {P.nvars} indicators, expected {nx + ny}")
        if P.has_negative_exponents():
            return Check(False, f"polynomial {k} has negative exponents")
        for e in P.terms:
            ye = e[nx:]
            if any(b > p for b, p in zip(ye, c.exps)):
                return Check(False, f"polynomial {k}: Y-exponent {ye} exceeds {c.exps}")
            if c.form == VR and tuple(ye) == tuple(c.exps):
                return Check(False, f"Y-exponent {ye} is not strictly below {c.exps}")
    if R.is_trivial():
        return Check(True, "trivial ring: every identity holds")
    ys = [as_frac(R, y) for y in c.left]
    xs = [as_frac(R, x) for x in c.right]
    lhs = FracElement.of(R.one)
    for y, p in zip(ys, c.exps):
        lhs = lhs * y ** p
    pts = xs + ys
    if c.form == VPRIME:
        rhs = FracElement.of(R.zero)
        for x, P in zip(xs, c.polys):
            if not P.is_zero():
                rhs = rhs + x * _eval_frac(P, pts)
    else:
        rhs = _eval_frac(c.polys[0], pts)
    if lhs != rhs:
        return Check(False, f"identity fails: left side {lhs}, right side {rhs}")
    return Check(True, "ok")


def _eval_frac(P, pts):
    v = evaluate(P, pts)
    return v if isinstance(v, FracElement) else FracElement.of(v)


# search ----------------------------------------------------------------

def _rowkey(e):
    return (sum(e),) + tuple(e)


def search_val_cert(R: RingPresentation, left: Sequence, right: Sequence, p_bound: int = 4,
                    deg_bound: int = 6, max_unknowns: int = 20000) -> ValCert | None:
    """Bounded search for a vprime certificate.

    Level L uses the exponent L (capped at p_bound) for every left atom and
    total X-degree and R-coefficient degree min(L, deg_bound); each level
    contains the previous one.  Denominators are cleared with
    D = prod e_i^p_i prod d_k^(deg+1), so the unknown coefficients enter a
    field-linear system over normal forms of R.
    """
    _require_integral(R)
    ys = [as_frac(R, y) for y in left]
    xs = [as_frac(R, x) for x in right]
    nx, ny = len(xs), len(ys)
    for i, y in enumerate(ys):
        if y.is_zero():
            exps = [0] * ny
            exps[i] = 1
            zero = [IndicatorPoly(R, nx + ny) for _ in xs]
            return _verified(ValCert(VPRIME, ys, exps, xs, zero), R)
    if R.is_trivial():
        return ValCert(VPRIME, ys, [0] * ny, xs, [IndicatorPoly(R, nx + ny) for _ in xs])
    for L in range(max(p_bound, deg_bound) + 1):
        p, d = min(L, p_bound), min(L, deg_bound)
        c = _search_level(R, ys, xs, p, d, max_unknowns)
        if c is not None:
            return _verified(c, R)
    return None


def _verified(c, R):
    v = verify_val_cert(c, R)
    if not v:
        raise AssertionError(f"search produced an invalid certificate: {v.reason}")
    return c


def _search_level(R, ys, xs, p, d, max_unknowns):
    nx, ny = len(xs), len(ys)
    basis = R.standard_monomials(d)
    alphas = list(monomials_upto(nx, d)) if nx else []
    betas = list(itertools.product(range(p + 1), repeat=ny))
    if nx * len(alphas) * len(betas) * len(basis) > max_unknowns:
        return None
    pw = {}

    def power(base, k):
        key = (id(base), k)
        if key not in pw:
            pw[key] = base ** k
        return pw[key]

    dd = [x.den for x in xs]
    common = R.one
    for k in range(nx):
        common = common * power(dd[k], d + 1)
    target = common
    for y in ys:
        target = target * power(y.num, p)
    span = Span(R.field, _rowkey)
    cols = {}
    for j in range(nx):
        for a in alphas:
            xpart = xs[j].num
            for k in range(nx):
                xpart = xpart * power(xs[k].num, a[k]) * power(dd[k], d + 1 - a[k] - (k == j))
            for b_exp in betas:
                v = xpart
                for i, y in enumerate(ys):
                    v = v * power(y.num, b_exp[i]) * power(y.den, p - b_exp[i])
                for bi, b in enumerate(basis):
                    mono = R.element(Poly.monomial(b, 1, R.field))
                    key = (j, a, b_exp, bi)
                    cols[key] = mono
                    span.add(key, (v * mono).poly.terms)
    sol = span.solve(target.poly.terms)
    if sol is None:
        return None
    polys = [dict() for _ in range(nx)]
    for (j, a, b_exp, bi), c in sol.items():
        e = tuple(a) + tuple(b_exp)
        term = cols[(j, a, b_exp, bi)] * R.element(Poly.const(R.nvars, c, R.field))
        polys[j][e] = polys[j][e] + term if e in polys[j] else term
    return ValCert(VPRIME, ys, [p] * ny, xs, [IndicatorPoly(R, nx + ny, P) for P in polys])


# the oracle ---------------------------------------------------------------

def _sorted_atoms(atoms):
    return sorted(atoms, key=repr)


class ValuativeOracle(EntailmentOracle):
    """Entailment between V' atoms: stored certificates first, then search.

    With ``search=False`` only evidence supplied as hints can prove a
    query, which is how constructed chains are checked.  Never refutes.
    """

    domain = "valuative"

    def __init__(self, R: RingPresentation, p_bound: int = 4, deg_bound: int = 6, search: bool = True):
        _require_integral(R)
        self.R = R
        self.p_bound = p_bound
        self.deg_bound = deg_bound
        self.search = search
        self._memo = []

    def decide(self, A, B):
        for a in _sorted_atoms(A):
            if a.is_zero():
                return proved(ZeroAtom(a))
        if not self.search:
            return unknown("no stored certificate and search disabled")
        for (A2, B2), v in self._memo:
            if A2 == A and B2 == B:
                return v
        left, right = _sorted_atoms(A), _sorted_atoms(B)
        c = search_val_cert(self.R, [a.value for a in left], [b.value for b in right],
                            self.p_bound, self.deg_bound)
        v = proved(c) if c is not None else unknown(f"p <= {self.p_bound}, degree <= {self.deg_bound}")
        self._memo.append(((frozenset(A), frozenset(B)), v))
        return v

    def check(self, A, B, evidence):
        if isinstance(evidence, ZeroAtom):
            return evidence.atom in A and evidence.atom.is_zero()
        if isinstance(evidence, ValCert):
            if evidence.form != VPRIME:
                return False
            if not all(VAtom(y) in A for y in evidence.left):
                return False
            if not all(VAtom(x) in B for x in evidence.right):
                return False
            return bool(verify_val_cert(evidence, self.R))
        return False


def val_oracle(R: RingPresentation, p_bound: int = 4, deg_bound: int = 6) -> ValuativeOracle:
    return ValuativeOracle(R, p_bound, deg_bound)


# subring of the fraction field ----------------------------------------

@dataclass
class Subring:
    """R[x_0..x_n] inside Frac R, presented with one new variable per point."""

    base: RingPresentation
    xs: tuple
    ring: RingPresentation
    tnames: tuple

    @property
    def points(self):
        return [self.ring.var(t) for t in self.tnames]

    def flatten(self, P: IndicatorPoly) -> IndicatorPoly:
        """Move the new variables of each coefficient into indicator exponents."""
        R, k = self.base, self.base.nvars
        out: dict = {}
        for alpha, c in P.terms.items():
            for e, a in c.poly.terms.items():
                ext = tuple(x + y for x, y in zip(alpha, e[k:]))
                coeff = R.element(Poly._raw(k, {e[:k]: a}, R.field, False))
                out[ext] = out[ext] + coeff if ext in out else coeff
        return IndicatorPoly(R, P.nvars, out)


def _fresh_names(R, n):
    names, i = [], 0
    while len(names) < n:
        cand = f"T{i}"
        while cand in R.vars:
            cand += "_"
        names.append(cand)
        i += 1
    return names


def subring_presentation(R: RingPresentation, xs: Sequence) -> Subring:
    """(I + <d_i T_i - n_i>) : (prod d_i)^infinity over k[vars, T]."""
    _require_integral(R)
    xs = tuple(as_frac(R, x) for x in xs)
    names = _fresh_names(R, len(xs))
    k, n = R.nvars, R.nvars + len(xs)
    pos = list(range(k))
    gens = [g.embed(n, pos) for g in R.ideal_gens]
    dprod = Poly.one(n, R.field)
    for i, x in enumerate(xs):
        T = Poly.var(n, k + i, R.field)
        num, den = x.num.poly.embed(n, pos), x.den.poly.embed(n, pos)
        gens.append(den * T - num)
        dprod = dprod * den
    J = Ideal(n, tuple(gens), R.field)
    if not dprod.is_constant():
        J = saturation(J, dprod)
    S = RingPresentation(R.vars + tuple(names), J.canonical(), R.field,
                         assume_reduced=True, assume_integral=True)
    return Subring(R, xs, S, tuple(names))


# witness decomposition ---------------------------------------------------

def _unit(n, i, k=1):
    e = [0] * n
    e[i] = k
    return tuple(e)


def _exps(P, i):
    return [e[i] for e in P.terms]


def _max_exp(P, i, default=0):
    v = _exps(P, i)
    return max(v) if v else default


def _min_exp(P, i, default=0):
    v = _exps(P, i)
    return min(v) if v else default


@dataclass
class WitnessDecomposition:
    """Divided witness W = P / X^q split into layers.

    layers[0] = X_0 f_0 and layers[k] holds the terms whose highest
    indicator is k.  g[k] (1 <= k <= n) are the layers with the r-powers
    factored out; g[0] is unused.
    """

    certificate: DimCertificate
    ring: RingPresentation
    points: tuple
    witness: IndicatorPoly
    trailing: tuple
    divided: IndicatorPoly
    layers: list
    f: list
    g: list
    r: list

    @property
    def n(self):
        return len(self.points) - 1

    @property
    def f0(self):
        return self.f[0]

    def reconstruct(self) -> IndicatorPoly:
        return _reconstruct(self.ring, self.n, self.f, self.g, self.r)

    def ys(self) -> list:
        return _ys(self)


def _layer_index(e):
    for i in range(len(e) - 1, -1, -1):
        if e[i]:
            return i, e[i]
    return None, 0


def _gs(R, n, layers, r):
    g = [None] * (n + 1)
    N = n + 1
    for k in range(1, n + 1):
        shift = [0] * N
        shift[k] = -1
        if n == 1:
            shift[0] += r[0]
        elif k < n:
            for j in range(k):
                shift[j] -= r[j]
        else:
            for j in range(n - 1):
                shift[j] -= r[j]
            shift[n - 1] += r[n - 1]
        g[k] = layers[k].mul_monomial(tuple(shift))
    return g


def _r_exponents(n, layers):
    if n <= 0:
        return []
    r = [0] * n
    if n == 1:
        r[0] = max(0, -_min_exp(layers[1], 0))
        return r
    for j in range(n - 1):
        r[j] = max([0] + [_max_exp(layers[k], j) for k in range(j + 1, n + 1) if not layers[k].is_zero()])
    r[n - 1] = max(0, -_min_exp(layers[n], n - 1))
    return r


def g_constraints_hold(n, g) -> bool:
    """g_k has nonpositive exponents below k, except that g_n (n >= 2) and g_1
    (n = 1) need nonnegative exponents in indicator n-1."""
    for k in range(1, n + 1):
        P = g[k]
        if P.is_zero():
            continue
        if any(a < 0 for a in _exps(P, k)):
            return False
        for j in range(k):
            last = (j == n - 1 and k == n)
            if last and any(a < 0 for a in _exps(P, j)):
                return False
            if not last and any(a > 0 for a in _exps(P, j)):
                return False
    return True


def _reconstruct(R, n, f, g, r):
    N = n + 1
    total = IndicatorPoly.const(R, N) + f[0].mul_monomial(_unit(N, 0))
    for k in range(1, n + 1):
        shift = [0] * N
        shift[k] = 1
        if n == 1:
            shift[0] -= r[0]
        elif k < n:
            for j in range(k):
                shift[j] += r[j]
        else:
            for j in range(n - 1):
                shift[j] += r[j]
            shift[n - 1] -= r[n - 1]
        total = total + g[k].mul_monomial(tuple(shift))
    return total


def decompose_witness(c: DimCertificate, subring: Subring | None = None,
                      r: Sequence[int] | None = None) -> WitnessDecomposition:
    """Layers, r exponents and g polynomials of a lex certificate.

    The order must be lex with X_n most significant.  With ``subring`` the
    certificate lives over its presentation and is first flattened to
    R-coefficients; otherwise the points are the ring elements of c.
    Caller-supplied ``r`` replaces the minimal choice but must still meet
    the support constraints.
    """
    N = len(c.points)
    n = N - 1
    if c.order != lex_desc(N):
        raise ValueError("decomposition needs lex order with the last indicator most significant")
    if subring is not None:
        R, pts, W = subring.base, tuple(subring.xs), subring.flatten(c.witness)
    else:
        R, pts, W = c.ring, tuple(FracElement.of(x) for x in c.points), c.witness
    if W.is_zero():
        raise ValueError("zero witness")
    key = c.order.key
    q = min(W.terms, key=key)
    if not W.terms[q].is_one():
        raise ValueError(f"trailing coefficient {W.terms[q]} is not 1: unverified input")
    D = W.mul_monomial(tuple(-a for a in q))
    layers = [dict() for _ in range(N)]
    for e, coeff in D.terms.items():
        k, lead = _layer_index(e)
        if k is None:
            continue
        if lead < 0:
            raise ValueError(f"term X^{e} lies below the trailing monomial: unverified input")
        layers[k][e] = coeff
    layers = [IndicatorPoly(R, N, L) for L in layers]
    f = [L.mul_monomial(_unit(N, k, -1)) for k, L in enumerate(layers)]
    rr = _r_exponents(n, layers) if r is None else [int(a) for a in r]
    if len(rr) != max(n, 0):
        raise ValueError(f"expected {max(n, 0)} r exponents")
    g = _gs(R, n, layers, rr)
    if not g_constraints_hold(n, g):
        raise ValueError(f"r = {rr} violates the support constraints on the g polynomials")
    d = WitnessDecomposition(c, R, pts, W, q, D, layers, f, g, rr)
    if d.reconstruct() != D:
        raise AssertionError("nested reconstruction does not reproduce the divided witness")
    return d


def r_is_minimal(d: WitnessDecomposition) -> bool:
    for k, rk in enumerate(d.r):
        if rk == 0:
            continue
        r2 = list(d.r)
        r2[k] -= 1
        if g_constraints_hold(d.n, _gs(d.ring, d.n, d.layers, r2)):
            return False
    return True


# the chain ----------------------------------------------------------------

def _ys(d: WitnessDecomposition) -> list:
    R, n, x = d.ring, d.n, list(d.points)
    if n <= 0:
        return []
    one = FracElement.of(R.one)

    def ev(P):
        return _eval_frac(P, x) if not P.is_zero() else FracElement.of(R.zero)

    if n == 1:
        return [x[1] / x[0] ** d.r[0]]
    ys = [(one + x[0] * ev(d.f[0])) / x[0] ** d.r[0]]
    for k in range(1, n - 1):
        ys.append((ys[-1] + x[k] * ev(d.g[k])) / x[k] ** d.r[k])
    ys.append(x[n] / x[n - 1] ** d.r[n - 1])
    return ys


@dataclass
class StepEvidence:
    kind: str                 # "valcert", "syntactic" or "zero-atom"
    cert: ValCert | None = None
    atom: VAtom | None = None

    def hints(self):
        if self.kind == "valcert":
            return [self.cert]
        if self.kind == "zero-atom":
            return [ZeroAtom(self.atom)]
        return []


@dataclass
class ComplementaryChainV:
    ring: RingPresentation
    xs: list                  # FracElements x_0..x_n
    ys: list
    us: list                  # LatticeTerms over VAtoms
    steps: list = field(default_factory=list)   # StepEvidence per inequality

    def chain(self) -> ComplementaryChain:
        return ComplementaryChain([VAtom(x) for x in self.xs], list(self.us),
                                  [s.hints() for s in self.steps])

    def inequalities(self):
        return self.chain().steps()


def _subst(P: IndicatorPoly, nout: int, images) -> IndicatorPoly:
    """X_i -> monomial images[i] (an exponent vector of length nout)."""
    out: dict = {}
    for e, c in P.terms.items():
        f = [0] * nout
        for i, a in enumerate(e):
            if a:
                img = images[i]
                if img is None:
                    raise ValueError(f"indicator {i} has no image")
                for t, b in enumerate(img):
                    f[t] += a * b
        f = tuple(f)
        out[f] = out[f] + c if f in out else c
    return IndicatorPoly(P.ring, nout, out)


def _clear_exponents(polys, idx):
    """Least e_j >= 0 making every exponent of indicator idx[j] nonnegative."""
    return [max([0] + [-_min_exp(P, i, 0) for P in polys if not P.is_zero()]) for i in idx]


def _step_cert(R, left, exps, right, polys):
    c = ValCert(VPRIME, left, exps, right, polys)
    v = verify_val_cert(c, R)
    if not v:
        raise AssertionError(f"constructed step certificate fails: {v.reason}")
    return c


def _evidence(cert):
    for y, p in zip(cert.left, cert.exps):
        if y.is_zero():
            return StepEvidence("zero-atom", atom=VAtom(y))
    return StepEvidence("valcert", cert)


def build_chain(d: WitnessDecomposition) -> ComplementaryChainV:
    """u_0 = V'(y_0), u_k = V'(y_k) ^ V'(x_0) ^ ... ^ V'(x_{k-1}) for
    1 <= k <= n-2, u_{n-1} = V'(y_{n-1}), u_n = 0, with a certificate for
    every inequality that is not purely formal."""
    R, n, x = d.ring, d.n, list(d.points)
    N = n + 1
    ys = d.ys()
    Vt = lambda v: LatticeTerm.atom(VAtom(v))
    bottom = LatticeTerm.bottom()
    us = []
    if n >= 1:
        us.append(Vt(ys[0]))
        for k in range(1, n - 1):
            us.append(LatticeTerm.meet_of([VAtom(ys[k])] + [VAtom(x[j]) for j in range(k)]))
        if n >= 2:
            us.append(Vt(ys[n - 1]))
    us.append(bottom)
    steps = []
    if n == 0:
        P = _subst(-d.f[0], 1, [_unit(1, 0)])
        steps.append(_evidence(_step_cert(R, [], [], [x[0]], [P])))
    elif n == 1:
        r0 = d.r[0]
        P0 = _subst(-d.f[0], 2, [_unit(2, 0), None])
        P1 = _subst(-d.g[1], 2, [_unit(2, 0), (r0, 1)])
        steps.append(_evidence(_step_cert(R, [], [], [x[0], ys[0]], [P0, P1])))
    else:
        P0 = _subst(-d.f[0], 2, [_unit(2, 0)] + [None] * n)
        P1 = IndicatorPoly.monomial(R, _unit(2, 0, d.r[0]))
        steps.append(_evidence(_step_cert(R, [], [], [x[0], ys[0]], [P0, P1])))
        for k in range(1, n):
            # left atoms (y_{k-1}, x_0..x_{k-1}), right atoms (x_k, y_k)
            nout = 2 + 1 + k
            images = [_unit(nout, 3 + j) for j in range(k)] + [None] * (N - k)
            images[k] = _unit(nout, 0)
            if k < n - 1:
                A = _subst(-d.g[k], nout, images)
                e = _clear_exponents([A], range(3, nout))
                Ye = tuple([0, 0, 0] + e)
                PA = A.mul_monomial(Ye)
                PB = IndicatorPoly.monomial(R, _unit(nout, 0, d.r[k])).mul_monomial(Ye)
            else:
                images_n = list(images)
                images_n[n] = tuple((d.r[n - 1] if t == 0 else 0) + (1 if t == 1 else 0) for t in range(nout))
                A = _subst(-d.g[n - 1], nout, images)
                B = _subst(-d.g[n], nout, images_n)
                e = _clear_exponents([A, B], range(3, nout))
                Ye = tuple([0, 0, 0] + e)
                PA, PB = A.mul_monomial(Ye), B.mul_monomial(Ye)
            left = [ys[k - 1]] + x[:k]
            steps.append(_evidence(_step_cert(R, left, [1] + e, [x[k], ys[k]], [PA, PB])))
    if n >= 1:
        one3 = IndicatorPoly.const(R, 3)
        steps.append(_evidence(_step_cert(R, [ys[n - 1], x[n - 1]], [1, d.r[n - 1]], [x[n]], [one3])))
    steps.append(StepEvidence("syntactic"))
    return ComplementaryChainV(R, x, ys, us, steps)


def check_chain(ch: ComplementaryChainV, o: EntailmentOracle | None = None):
    if o is None:
        o = ValuativeOracle(ch.ring, search=False)
    return check_complementary(ch.chain(), o)


def _empty_chain(R):
    cert = ValCert(VPRIME, (), (), (), ())
    return ComplementaryChainV(R, [], [], [], [StepEvidence("valcert", cert)])


def zero_chain(R: RingPresentation, xs: Sequence, j: int) -> ComplementaryChainV:
    """Chain for points with x_j = 0: u = 1 before j, u_j = V'(x_{j-1}), u = 0 after.

    V'(0) is bottom, so every inequality from j + 1 on has a bottom left side.
    """
    xs = [as_frac(R, x) for x in xs]
    if not xs[j].is_zero():
        raise ValueError(f"point {j} is not zero")
    n = len(xs) - 1
    top, bottom = LatticeTerm.top(), LatticeTerm.bottom()
    uj = top if j == 0 else LatticeTerm.atom(VAtom(xs[j - 1]))
    us = [top] * j + [uj] + [bottom] * (n - j)
    steps = [StepEvidence("syntactic") for _ in range(n + 2)]
    steps[j + 1] = StepEvidence("zero-atom", atom=VAtom(xs[j]))
    return ComplementaryChainV(R, xs, [], us, steps)


@dataclass
class ChainResult:
    chain: ComplementaryChainV | None
    certificate: DimCertificate | None = None
    decomposition: WitnessDecomposition | None = None
    subring: Subring | None = None
    verdict: object = None
    reason: str = ""

    @property
    def found(self):
        return self.chain is not None


def vdim_to_Vdim(R: RingPresentation, xs: Sequence, degree_bound: int = 6,
                 coeff_bound: int | None = None) -> ChainResult:
    """Dimension certificate for R[x_0..x_n] under lex, then the chain."""
    _require_integral(R)
    if R.is_trivial():
        ch = _empty_chain(R)
        return ChainResult(ch, verdict=check_chain(ch), reason="trivial ring: dimension -1")
    xs = [as_frac(R, x) for x in xs]
    cert = dec = sub = None
    zeros = [i for i, x in enumerate(xs) if x.is_zero()]
    if zeros:
        ch = zero_chain(R, xs, zeros[0])
    else:
        sub = subring_presentation(R, xs)
        cert = search_dim_cert(sub.ring, sub.points, lex_desc(len(xs)), degree_bound, coeff_bound)
        if cert is None:
            return ChainResult(None, subring=sub, reason=f"no lex certificate within degree {degree_bound}")
        dec = decompose_witness(cert, sub)
        ch = build_chain(dec)
    v = check_chain(ch)
    if not v.proved:
        raise AssertionError(f"constructed chain does not check: {v}")
    return ChainResult(ch, cert, dec, sub, v)


def chain_searcher(R: RingPresentation, degree_bound: int = 6):
    """Searcher for lattices.kdim_leq_on_tuples: tuples of VAtoms to chains."""
    def search(atoms):
        res = vdim_to_Vdim(R, [a.value for a in atoms], degree_bound)
        if not res.found:
            return []
        return res.chain.chain()
    return search
