"""Batch front-end: one JSON document in, one JSON document out.

    valdim COMMAND [--input FILE] [--degree N] [--coeff-degree N] [--p N] [--depth N]

Exit codes: 0 proved / true / found, 1 refuted / false, 2 unknown or not
found within the bounds, 3 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import serialize as S
from .dimcerts import (ComponentWitness, dimv_leq_sampled, glue_components, polynomial_extension, search_dim_cert,
                       verify_dim_cert, vdim_leq_sampled)
from .dynval import dyn_entails, replay_report
from .groebner import radical_exponent, radical_member
from .lattices import kdim_leq_on_tuples, leq, table_oracle, table_searcher
from .polys import ParseError, parse_poly
from .ppring import annihilator, injective, machinery_no1_dimcert, regular_split_check, split_at, split_sequence
from .valuative import VAtom, ValuativeOracle, search_val_cert, vdim_to_Vdim, verify_val_cert
from .zariski import ZariskiAtom, ZariskiOracle

PROVED, REFUTED, UNKNOWN, INPUT_ERROR = 0, 1, 2, 3


@dataclass
class Job:
    command: str
    document: dict
    flags: dict = field(default_factory=dict)


class InputError(Exception):
    def __init__(self, kind, message, position=None):
        super().__init__(message)
        self.kind, self.message, self.position = kind, message, position


COMMANDS = {}


def command(name):
    def reg(f):
        COMMANDS[name] = f
        return f
    return reg


def _ring(doc, key="ring"):
    return S.load_ring(S.need(doc, key, dict))


def _ideal_doc(gens, R):
    return [g.to_str(R.vars) for g in gens]


@command("parse")
def _parse(doc, fl):
    R = _ring(doc)
    p = parse_poly(S.need(doc, "poly", str), R.vars, R.field, laurent=bool(doc.get("laurent")))
    out = {"poly": p.to_str(R.vars)}
    if not p.laurent or not any(a < 0 for e in p.terms for a in e):
        out["normal_form"] = str(R.element(p))
    return out, PROVED


@command("gb")
def _gb(doc, fl):
    R = _ring(doc)
    o = S.load_order(doc.get("order"), R.nvars, "grlex") if R.nvars else None
    G = R.ideal.groebner(o)
    return {"order": S.dump_order(o) if o else None, "basis": _ideal_doc(G.gens, R)}, PROVED


@command("member")
def _member(doc, fl):
    R = _ring(doc)
    f = parse_poly(S.need(doc, "poly", str), R.vars, R.field)
    ok = R.ideal.contains(f)
    return {"member": ok, "normal_form": str(R.element(f))}, PROVED if ok else REFUTED


@command("radical-member")
def _radical(doc, fl):
    R = _ring(doc)
    f = parse_poly(S.need(doc, "poly", str), R.vars, R.field)
    ok = radical_member(f, R.ideal)
    out = {"member": ok}
    if ok:
        out["exponent"] = radical_exponent(f, R.ideal, 64)
    return out, PROVED if ok else REFUTED


@command("ann")
def _ann(doc, fl):
    R = _ring(doc)
    J = annihilator(R, S.load_element(R, S.need(doc, "element")))
    return {"ideal": _ideal_doc(J.canonical(), R)}, PROVED


def _components(split, R, xs=None):
    comps = [{"index": sorted(I), "ideal": _ideal_doc(C.ideal.canonical(), R)} for C, I in split.components]
    out = {"components": comps, "injective": injective(split)}
    if xs is not None:
        out["classes"] = [c["classes"] for c in regular_split_check(split, xs)]
    return out


@command("split")
def _split(doc, fl):
    R = _ring(doc)
    a = S.load_element(R, S.need(doc, "element"))
    return _components(split_at(R, a), R), PROVED


@command("rmin-stage")
def _rmin(doc, fl):
    R = _ring(doc)
    xs = [S.load_element(R, x) for x in S.need(doc, "elements", list)]
    return _components(split_sequence(R, xs), R, xs), PROVED


def _search(doc, fl, default_order):
    R = _ring(doc)
    pts = [S.load_element(R, x) for x in S.need(doc, "points", list)]
    o = S.load_order(doc.get("order"), len(pts), default_order)
    c = search_dim_cert(R, pts, o, fl["degree"], fl.get("coeff_degree"))
    if c is None:
        return {"found": False, "bound": fl["degree"]}, UNKNOWN
    return {"found": True, "certificate": S.dump_dimcert(c)}, PROVED


@command("kdim-search")
def _kdim(doc, fl):
    return _search(doc, fl, "lex_desc")


@command("dimv-search")
def _dimv(doc, fl):
    return _search(doc, fl, "grlex")


@command("cert-verify")
def _cert_verify(doc, fl):
    c = S.load_dimcert(doc.get("certificate", doc))
    v = verify_dim_cert(c)
    return {"ok": v.ok, "reason": v.reason}, PROVED if v.ok else REFUTED


@command("glue")
def _glue(doc, fl):
    """Either two component witnesses with their y and z, or a list of
    splitting elements for the per-component driver."""
    R = _ring(doc)
    pts = [S.load_element(R, x) for x in S.need(doc, "points", list)]
    o = S.load_order(doc.get("order"), len(pts), "lex_desc")
    if "first" in doc or "second" in doc:
        parts = []
        for key in ("first", "second"):
            d = S.need(doc, key, dict)
            parts.append(ComponentWitness(S.load_indicator(R, S.need(d, "witness", None, key), len(pts)),
                                          S.load_element(R, d.get("y", "0")),
                                          S.load_element(R, S.need(d, "z", None, key))))
        c = glue_components(R, pts, o, *parts)
    else:
        split_on = doc.get("split_on")
        if split_on is not None:
            split_on = [S.load_element(R, x) for x in split_on]
        try:
            c = machinery_no1_dimcert(R, pts, o, fl["degree"], split_on, fl.get("coeff_degree"))
        except LookupError as e:
            return {"found": False, "reason": str(e)}, UNKNOWN
    return {"found": True, "certificate": S.dump_dimcert(c)}, PROVED


def _report(rep):
    rows = [{"points": r["points"], "found": r["found"],
             "certificate": S.dump_dimcert(r["certificate"]) if r["certificate"] else None}
            for r in rep["results"]]
    return {"n": rep["n"], "bound": rep["bound"], "consistent": rep["consistent"],
            "verdict": rep["verdict"], "results": rows}


@command("vdim-check")
def _vdim_check(doc, fl):
    """Sampled dimv <= n, or with "valuative": true sampled vdim <= n."""
    R = _ring(doc)
    n = S.need(doc, "n", int)
    if doc.get("valuative"):
        Rx = polynomial_extension(R, n)
        tuples = [[S.load_element(Rx, x) for x in t] for t in S.need(doc, "tuples", list)]
        rep = vdim_leq_sampled(R, n, tuples, fl["degree"])
    else:
        tuples = [[S.load_element(R, x) for x in t] for t in S.need(doc, "tuples", list)]
        o = S.load_order(doc.get("order"), n + 1, "grlex")
        rep = dimv_leq_sampled(R, n, tuples, o, fl["degree"], fl.get("coeff_degree"))
    return _report(rep), PROVED if rep["consistent"] else UNKNOWN


@command("vdim-to-Vdim")
def _vdim_to_Vdim(doc, fl):
    R = _ring(doc)
    xs_doc = S.need(doc, "xs", list)
    xs = [] if R.is_trivial() else [S.load_frac(R, x) for x in xs_doc]
    res = vdim_to_Vdim(R, xs, fl["degree"], fl.get("coeff_degree"))
    if not res.found:
        return {"found": False, "reason": res.reason}, UNKNOWN
    return {"found": True, "chain": S.dump_chain(res.chain)}, PROVED


@command("val-cert-verify")
def _val_cert_verify(doc, fl):
    R = _ring(doc)
    c = S.load_valcert(R, S.need(doc, "certificate", dict))
    v = verify_val_cert(c, R)
    return {"ok": v.ok, "reason": v.reason}, PROVED if v.ok else REFUTED


@command("val-entail")
def _val_entail(doc, fl):
    R = _ring(doc)
    left = [S.load_frac(R, x) for x in doc.get("left", [])]
    right = [S.load_frac(R, x) for x in doc.get("right", [])]
    zero = next((y for y in left if y.is_zero()), None)
    if zero is not None:
        return {"found": True, "zero_atom": S.dump_frac(zero)}, PROVED
    c = search_val_cert(R, left, right, fl["p"], fl["degree"])
    if c is None:
        return {"found": False, "p_bound": fl["p"], "degree_bound": fl["degree"]}, UNKNOWN
    return {"found": True, "certificate": S.dump_valcert(c)}, PROVED


def _oracle(doc, fl):
    kind = doc.get("oracle", "table")
    if kind == "table":
        t = S.load_table(S.need(doc, "table", dict))
        return table_oracle(t), (lambda a: a), (lambda a: a)
    R = _ring(doc)
    if kind == "zariski":
        return ZariskiOracle(R), (lambda a: ZariskiAtom(S.load_element(R, a))), (lambda a: str(a.element))
    if kind == "valuative":
        return (ValuativeOracle(R, fl["p"], fl["degree"]), (lambda a: VAtom(S.load_frac(R, a))),
                S.dump_vatom)
    raise InputError("schema", f"unknown oracle {kind!r}")


def _verdict_code(v):
    return PROVED if v.proved else REFUTED if v.refuted else UNKNOWN


@command("lattice-leq")
def _lattice_leq(doc, fl):
    o, atom, _ = _oracle(doc, fl)
    s = S.load_term(S.need(doc, "lhs", list), atom)
    t = S.load_term(S.need(doc, "rhs", list), atom)
    v = leq(s, t, o)
    return {"verdict": v.status.name.lower()}, _verdict_code(v)


@command("lattice-kdim")
def _lattice_kdim(doc, fl):
    """Search complementary chains for tuples of table atoms over DNF
    terms of meet width <= "width"."""
    t = S.load_table(S.need(doc, "table", dict))
    o = table_oracle(t)
    tuples = S.need(doc, "tuples", list)
    res = kdim_leq_on_tuples(tuples, table_searcher(list(t.atoms), doc.get("width", 2)), o)
    rows = []
    for xs, ch in zip(tuples, res):
        rows.append({"xs": xs, "found": ch is not None,
                     "us": [S.dump_term(u, lambda a: a) for u in ch.us] if ch else None})
    ok = all(r["found"] for r in rows)
    return {"results": rows, "all_found": ok}, PROVED if ok else UNKNOWN


@command("dyn-val-entail")
def _dyn(doc, fl):
    R = _ring(doc)
    hyps = [S.load_div(R, a) for a in doc.get("hyps", [])]
    goals = [S.load_div(R, a) for a in doc.get("goals", [])]
    seeds = [S.load_element(R, x) for x in doc.get("seeds", [])]
    v = dyn_entails(R, hyps, goals, fl["depth"], seeds, doc.get("max_nodes", 5000))
    if not v.proved:
        return {"proved": False, "bound": v.evidence}, UNKNOWN
    return {"proved": True, "replayed": replay_report(v.evidence).ok, "proof": S.dump_proof(v.evidence)}, PROVED


def dispatch(job: Job):
    """Returns (result document, exit code); never raises on bad input."""
    fl = {"degree": 6, "coeff_degree": None, "p": 4, "depth": 3}
    fl.update({k: v for k, v in job.flags.items() if v is not None})
    f = COMMANDS.get(job.command)
    try:
        if f is None:
            raise InputError("usage", f"unknown command {job.command!r}")
        if not isinstance(job.document, dict):
            raise InputError("schema", "input must be a JSON object")
        return f(job.document, fl)
    except InputError as e:
        return _error(e.kind, e.message, e.position)
    except ParseError as e:
        return _error("parse", e.message, e.position)
    except S.SchemaError as e:
        return _error("schema", e.message, e.position)
    except (ValueError, ZeroDivisionError, TypeError, KeyError) as e:
        return _error("value", str(e), None)


def _error(kind, message, position):
    return {"error": {"type": kind, "message": message, "position": position}}, INPUT_ERROR


def render(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="valdim", description="Dimension certificates and valuative lattices.")
    p.add_argument("command", help=", ".join(sorted(COMMANDS)))
    p.add_argument("--input", help="read the JSON document from this file instead of stdin")
    p.add_argument("--degree", type=int, default=6, help="degree bound (default 6)")
    p.add_argument("--coeff-degree", type=int, default=None, help="coefficient degree bound (default: --degree)")
    p.add_argument("--p", type=int, default=4, help="exponent bound for valuative certificates (default 4)")
    p.add_argument("--depth", type=int, default=3, help="prover depth (default 3)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        out, code = _error("json", e.msg, e.pos)
    except OSError as e:
        out, code = _error("io", str(e), None)
    else:
        flags = {"degree": args.degree, "coeff_degree": args.coeff_degree, "p": args.p, "depth": args.depth}
        out, code = dispatch(Job(args.command, doc, flags))
    sys.stdout.write(render(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
