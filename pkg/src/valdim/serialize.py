"""JSON documents for rings, certificates, lattice terms, chains and proofs.

Polynomials and ring elements travel as text in the ring variables.  Each
dumper has a matching loader; dumping a loaded document gives it back.
"""
from __future__ import annotations

import json

from .dimcerts import DimCertificate
from .dynval import DivAtom, ProofNode, ProofTree, Step
from .fields import GF, QQ
from .lattices import EntailmentTable, LatticeTerm
from .orders import OrderSpec, grlex, lex, lex_desc, matrix_order
from .polys import Poly, parse_poly
from .rings import FracElement, IndicatorPoly, RingElement, RingPresentation
from .valuative import VAtom, ValCert, ComplementaryChainV, StepEvidence


class SchemaError(ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.message = message
        self.position = position


def need(doc, key, kind=None, where="document"):
    if not isinstance(doc, dict):
        raise SchemaError(f"{where} must be a JSON object")
    if key not in doc:
        raise SchemaError(f"{where} lacks the key {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise SchemaError(f"{where}[{key!r}] has the wrong type")
    return v


# rings and elements -------------------------------------------------------

def load_field(doc):
    if doc in (None, "Q"):
        return QQ
    if isinstance(doc, dict) and isinstance(doc.get("Fp"), int):
        return GF(doc["Fp"])
    raise SchemaError('field must be "Q" or {"Fp": p}')


def dump_field(f):
    return "Q" if f.p == 0 else {"Fp": f.p}


def load_ring(doc) -> RingPresentation:
    vars = need(doc, "vars", list, "ring")
    fld = load_field(doc.get("field", "Q"))
    ideal = doc.get("ideal", [])
    if not isinstance(ideal, list) or not all(isinstance(g, str) for g in ideal):
        raise SchemaError("ring['ideal'] must be a list of polynomial strings")
    return RingPresentation(vars, [parse_poly(g, vars, fld) for g in ideal], fld,
                            assume_reduced=bool(doc.get("assume_reduced", False)),
                            assume_integral=bool(doc.get("assume_integral", False)))


def dump_ring(R: RingPresentation):
    return {"field": dump_field(R.field), "vars": list(R.vars),
            "ideal": [g.to_str(R.vars) for g in R.ideal_gens],
            "assume_reduced": R.assume_reduced, "assume_integral": R.assume_integral}


def load_element(R, text) -> RingElement:
    if isinstance(text, int) and not isinstance(text, bool):
        return R.element(text)
    if not isinstance(text, str):
        raise SchemaError("ring element must be a polynomial string")
    return R.element(parse_poly(text, R.vars, R.field))


def dump_element(x: RingElement):
    return str(x)


def load_frac(R, doc) -> FracElement:
    if isinstance(doc, dict):
        num = load_element(R, need(doc, "num", None, "fraction"))
        den = load_element(R, doc.get("den", "1"))
        if den.is_zero() and not R.is_trivial():
            raise SchemaError("zero denominator")
        return FracElement(num, den)
    return FracElement.of(load_element(R, doc))


def dump_frac(x: FracElement):
    if x.den.is_one():
        return str(x.num)
    return {"num": str(x.num), "den": str(x.den)}


# orders ---------------------------------------------------------------------

def load_order(doc, n: int, default: str = "grlex") -> OrderSpec:
    """{"kind": "lex", "priority": [...]}, {"kind": "matrix", "rows": [...]}
    or one of the names "grlex", "lex", "lex_desc" (sized to n)."""
    doc = default if doc is None else doc
    if doc == "grlex":
        o = grlex(n)
    elif doc == "lex":
        o = lex(n)
    elif doc == "lex_desc":
        o = lex_desc(n)
    elif isinstance(doc, dict) and doc.get("kind") == "lex":
        o = lex(n, _need_list(doc, "priority"))
    elif isinstance(doc, dict) and doc.get("kind") == "matrix":
        o = matrix_order(_need_list(doc, "rows"))
    else:
        raise SchemaError('order must be {"kind": "lex", "priority": [...]}, {"kind": "matrix", "rows": [...]}'
                          ' or "grlex" / "lex" / "lex_desc"')
    if o.nvars != n:
        raise SchemaError(f"order has {o.nvars} variables, expected {n}")
    return o


def _need_list(doc, key):
    return need(doc, key, list, "order")


def dump_order(o: OrderSpec):
    if o.kind == "lex":
        return {"kind": "lex", "priority": list(o.priority)}
    return {"kind": "matrix", "rows": [list(r) for r in o.rows]}


# indicator polynomials --------------------------------------------------------

def load_indicator(R, doc, n: int) -> IndicatorPoly:
    """Either a term list [{"exps": [...], "coeff": "..."}, ...] or
    {"indicators": [names], "text": "..."} with the indicator names distinct
    from the ring variables."""
    if isinstance(doc, list):
        terms = {}
        for t in doc:
            e = t.get("exps", t.get("exp")) if isinstance(t, dict) else None
            if not isinstance(e, list) or len(e) != n or not all(isinstance(a, int) for a in e):
                raise SchemaError(f"term {t!r} needs an exponent list of {n} integers under 'exps'")
            e = tuple(e)
            c = load_element(R, need(t, "coeff", None, "term"))
            terms[e] = terms[e] + c if e in terms else c
        return IndicatorPoly(R, n, terms)
    names = need(doc, "indicators", list, "witness")
    if len(names) != n:
        raise SchemaError(f"{len(names)} indicator names for {n} points")
    if set(names) & set(R.vars):
        raise SchemaError("indicator names clash with ring variables")
    allv = list(R.vars) + list(names)
    p = parse_poly(need(doc, "text", str, "witness"), allv, R.field, laurent=bool(doc.get("laurent")))
    k = R.nvars
    coeffs = {}
    for e, c in p.terms.items():
        ind, base = tuple(e[k:]), e[:k]
        if any(a < 0 for a in base):
            raise SchemaError("negative exponent on a ring variable")
        coeff = R.element(Poly.monomial(base, c, R.field))
        coeffs[ind] = coeffs[ind] + coeff if ind in coeffs else coeff
    return IndicatorPoly(R, n, coeffs)


def dump_indicator(P: IndicatorPoly):
    items = sorted(P.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    return [{"exps": list(e), "coeff": str(c)} for e, c in items]


# dimension certificates ---------------------------------------------------------

def load_dimcert(doc, default_order="lex_desc") -> DimCertificate:
    R = load_ring(need(doc, "ring", dict))
    pts = [load_element(R, x) for x in need(doc, "points", list)]
    o = load_order(doc.get("order"), len(pts), default_order)
    W = load_indicator(R, need(doc, "witness"), len(pts))
    tr = doc.get("trailing")
    return DimCertificate(R, pts, o, W, tuple(tr) if tr is not None else None)


def dump_dimcert(c: DimCertificate):
    return {"ring": dump_ring(c.ring), "points": [str(x) for x in c.points],
            "order": dump_order(c.order), "witness": dump_indicator(c.witness),
            "trailing": list(c.trailing) if c.trailing is not None else None}


# lattice terms and tables ---------------------------------------------------------

def load_term(doc, atom) -> LatticeTerm:
    """DNF: a list of meets, each a list of atoms; [[]] is top, [] bottom."""
    if not isinstance(doc, list) or not all(isinstance(m, list) for m in doc):
        raise SchemaError("a lattice term is a list of lists of atoms")
    return LatticeTerm([[atom(a) for a in m] for m in doc])


def dump_term(t: LatticeTerm, atom):
    meets = [sorted((atom(a) for a in m), key=_sortkey) for m in t.meets]
    return sorted(meets, key=lambda m: (len(m), [_sortkey(a) for a in m]))


def _sortkey(x):
    return json.dumps(x, sort_keys=True)


def load_table(doc) -> EntailmentTable:
    atoms = need(doc, "atoms", list, "table")
    seqs = []
    for q in doc.get("sequents", []):
        if isinstance(q, dict):
            seqs.append((q.get("lhs", []), q.get("rhs", [])))
        elif isinstance(q, list) and len(q) == 2:
            seqs.append((q[0], q[1]))
        else:
            raise SchemaError('a sequent is {"lhs": [...], "rhs": [...]}')
    return EntailmentTable(tuple(atoms), tuple(seqs))


def dump_table(t: EntailmentTable):
    return {"atoms": list(t.atoms),
            "sequents": [{"lhs": sorted(l), "rhs": sorted(r)} for l, r in t.sequents]}


# valuative certificates and chains ---------------------------------------------------

def _vatom_loader(R):
    return lambda a: VAtom(load_frac(R, a))


def dump_vatom(a: VAtom):
    return dump_frac(a.value)


def load_valcert(R, doc) -> ValCert:
    left = [load_frac(R, x) for x in need(doc, "left", list, "certificate")]
    right = [load_frac(R, x) for x in need(doc, "right", list, "certificate")]
    n = len(left) + len(right)
    polys = [load_indicator(R, p, n) for p in need(doc, "polys", list, "certificate")]
    return ValCert(need(doc, "form", str, "certificate"), left, need(doc, "exps", list, "certificate"),
                   right, polys)


def dump_valcert(c: ValCert):
    return {"form": c.form, "left": [dump_frac(y) for y in c.left], "exps": list(c.exps),
            "right": [dump_frac(x) for x in c.right], "polys": [dump_indicator(P) for P in c.polys]}


def dump_chain(ch: ComplementaryChainV):
    steps = []
    for s in ch.steps:
        d = {"kind": s.kind}
        if s.cert is not None:
            d["cert"] = dump_valcert(s.cert)
        if s.atom is not None:
            d["atom"] = dump_vatom(s.atom)
        steps.append(d)
    return {"ring": dump_ring(ch.ring), "xs": [dump_frac(x) for x in ch.xs],
            "ys": [dump_frac(y) for y in ch.ys],
            "us": [dump_term(u, dump_vatom) for u in ch.us], "steps": steps}


def load_chain(doc) -> ComplementaryChainV:
    R = load_ring(need(doc, "ring", dict, "chain"))
    va = _vatom_loader(R)
    steps = []
    for s in need(doc, "steps", list, "chain"):
        steps.append(StepEvidence(need(s, "kind", str, "step"),
                                  load_valcert(R, s["cert"]) if "cert" in s else None,
                                  va(s["atom"]) if "atom" in s else None))
    return ComplementaryChainV(R, [load_frac(R, x) for x in need(doc, "xs", list, "chain")],
                               [load_frac(R, y) for y in doc.get("ys", [])],
                               [load_term(u, va) for u in need(doc, "us", list, "chain")], steps)


# divisibility atoms and proof trees ---------------------------------------------------

def load_div(R, doc) -> DivAtom:
    if not (isinstance(doc, list) and len(doc) == 2):
        raise SchemaError("a divisibility atom is a pair [a, b] meaning a | b")
    return DivAtom(load_element(R, doc[0]), load_element(R, doc[1]))


def dump_div(a: DivAtom):
    return [str(a.a), str(a.b)]


def _dump_node(n: ProofNode):
    d = {"assume": [dump_div(a) for a in n.assume],
         "steps": [dict({"fact": dump_div(s.fact), "rule": s.rule,
                         "premises": [dump_div(p) for p in s.premises]},
                        **({"c": str(s.c)} if s.c is not None else {})) for s in n.steps]}
    c = n.close
    if c[0] == "goal":
        d["close"] = {"kind": "goal", "atom": dump_div(c[1])}
    elif c[0] == "collapse":
        d["close"] = {"kind": "collapse"}
    else:
        d["close"] = {"kind": "split", "rule": c[1], "instance": [str(x) for x in c[2]],
                      "children": [_dump_node(k) for k in c[3]]}
    return d


def dump_proof(t: ProofTree):
    return {"ring": dump_ring(t.ring), "hyps": [dump_div(h) for h in t.hyps],
            "goals": [dump_div(g) for g in t.goals], "seeds": [str(s) for s in t.seeds],
            "depth": t.depth, "root": _dump_node(t.root)}


def _load_node(R, d) -> ProofNode:
    node = ProofNode([load_div(R, a) for a in need(d, "assume", list, "node")])
    for s in need(d, "steps", list, "node"):
        node.steps.append(Step(load_div(R, s["fact"]), s["rule"],
                               tuple(load_div(R, p) for p in s.get("premises", [])),
                               load_element(R, s["c"]) if "c" in s else None))
    c = need(d, "close", dict, "node")
    kind = c.get("kind")
    if kind == "goal":
        node.close = ("goal", load_div(R, c["atom"]))
    elif kind == "collapse":
        node.close = ("collapse",)
    elif kind == "split":
        node.close = ("split", c["rule"], tuple(load_element(R, x) for x in c["instance"]),
                      [_load_node(R, k) for k in c["children"]])
    else:
        raise SchemaError(f"unknown closure kind {kind!r}")
    return node


def load_proof(doc) -> ProofTree:
    R = load_ring(need(doc, "ring", dict, "proof"))
    return ProofTree(R, tuple(load_div(R, h) for h in doc.get("hyps", [])),
                     tuple(load_div(R, g) for g in doc.get("goals", [])),
                     tuple(load_element(R, s) for s in doc.get("seeds", [])),
                     _load_node(R, need(doc, "root", dict, "proof")), doc.get("depth", 0))
