"""A bounded prover for the dynamical theory of divisibility atoms.

Atoms a | b range over a finite universe of ring elements: the elements
named in the sequent (plus 0, 1, -1 and the seeds), closed once under
negation, sum and product.  Ground equalities of the ring are built in,
since terms are normal forms.  The Horn rules are saturated at every node;
the two disjunctive rules open branches, each of which has to close on a
goal or on the collapse 0 | 1.  ``depth`` bounds the nesting of branches.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .dimcerts import Check
from .lattices import proved, unknown
from .rings import RingElement, RingPresentation

RULES = ("av1", "av2", "Av1", "Av2", "seed")


@dataclass(frozen=True)
class DivAtom:
    a: RingElement
    b: RingElement

    def __str__(self):
        return f"{self.a} | {self.b}"


def div(R: RingPresentation, a, b) -> DivAtom:
    return DivAtom(R.element(a), R.element(b))


@dataclass
class Step:
    fact: DivAtom
    rule: str
    premises: tuple = ()
    c: RingElement | None = None


@dataclass
class ProofNode:
    """``assume`` holds the atoms introduced at this node (the hypotheses at
    the root, one disjunct below a split).  ``close`` is ("goal", atom),
    ("collapse",) or ("split", rule, instance, children)."""

    assume: list
    steps: list = field(default_factory=list)
    close: tuple = ()


@dataclass
class ProofTree:
    ring: RingPresentation
    hyps: tuple
    goals: tuple
    seeds: tuple
    root: ProofNode
    depth: int = 0

    def size(self):
        def walk(n):
            k = 1
            if n.close and n.close[0] == "split":
                k += sum(walk(c) for c in n.close[3])
            return k
        return walk(self.root)


class _Universe:
    def __init__(self, R, base):
        self.R = R
        self.terms = []
        self.index = {}
        for x in base:
            self._add(x)
        self.base = list(range(len(self.terms)))
        U = [self.terms[i] for i in self.base]
        for u in U:
            self._add(-u)
        for u, v in itertools.combinations_with_replacement(U, 2):
            self._add(u * v)
            self._add(u + v)
        self.zero = self.index[R.zero]
        self.one = self.index[R.one]
        self.mone = self.index[-R.one]
        self._mul, self._add_t = {}, {}
        # factorizations p = a*x with a, x in the base
        self.factor = {}
        for a in self.base:
            for x in self.base:
                p = self.mul(a, x)
                if p is not None:
                    self.factor.setdefault(p, []).append((a, x))

    def _add(self, x):
        if x not in self.index:
            self.index[x] = len(self.terms)
            self.terms.append(x)
        return self.index[x]

    def mul(self, i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in self._mul:
            self._mul[key] = self.index.get(self.terms[i] * self.terms[j])
        return self._mul[key]

    def plus(self, i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in self._add_t:
            self._add_t[key] = self.index.get(self.terms[i] + self.terms[j])
        return self._add_t[key]


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, R, hyps, goals, seeds, max_nodes):
        self.R = R
        base = [R.zero, R.one, -R.one]
        for at in list(hyps) + list(goals):
            base += [at.a, at.b]
        base += list(seeds)
        self.U = _Universe(R, base)
        ix = self.U.index
        self.hyps = [(ix[h.a], ix[h.b]) for h in hyps]
        self.goals = [(ix[g.a], ix[g.b]) for g in goals]
        self.seeds = [ix[s] for s in seeds]
        self.max_nodes = max_nodes
        self.nodes = 0
        self.failed = set()

    # -- saturation ----------------------------------------------------
    def saturate(self, facts: frozenset, new):
        """Close facts | new under the Horn rules.  Returns (facts, derivations)
        where derivations maps every fact added here to (rule, premises, c)."""
        U = self.U
        F = set(facts)
        out, inn = {}, {}
        for a, b in F:
            out.setdefault(a, set()).add(b)
            inn.setdefault(b, set()).add(a)
        deriv = {}
        work = deque()

        def push(f, how):
            if f in F:
                return
            F.add(f)
            deriv[f] = how
            out.setdefault(f[0], set()).add(f[1])
            inn.setdefault(f[1], set()).add(f[0])
            work.append(f)

        for f, how in new:
            push(f, how)
        if not facts:
            push((U.one, U.mone), ("av1", (), None))
            for s in self.seeds:
                push((U.one, s), ("seed", (), None))
        collapse = (U.zero, U.one)
        while work:
            if collapse in F:
                break
            a, b = work.popleft()
            for c in U.base:
                ac, bc = U.mul(a, c), U.mul(b, c)
                if ac is not None and bc is not None:
                    push((ac, bc), ("av2", ((a, b),), c))
            for c in list(out.get(b, ())):
                push((a, c), ("Av1", ((a, b), (b, c)), None))
            for z in list(inn.get(a, ())):
                push((z, b), ("Av1", ((z, a), (a, b)), None))
            for c in list(out.get(a, ())):
                s = U.plus(b, c)
                if s is not None:
                    push((a, s), ("Av2", ((a, b), (a, c)), None))
        return frozenset(F), deriv

    def closing(self, F):
        if (self.U.zero, self.U.one) in F:
            return ("collapse",)
        for g in self.goals:
            if g in F:
                return ("goal", g)
        return None

    def instances(self, F):
        U = self.U
        for a, b in itertools.combinations(U.base, 2):
            if (a, b) not in F and (b, a) not in F:
                yield ("AV1", (a, b), None, [(a, b), (b, a)])
        for p, q in sorted(F):
            for a, x in U.factor.get(p, ()):
                for b, x2 in U.factor.get(q, ()):
                    if x2 != x or a == b:
                        continue
                    d1, d2 = (a, b), (U.zero, x)
                    if d1 in F or d2 in F:
                        continue
                    yield ("AV2", (a, b, x), (p, q), [d1, d2])

    # -- search --------------------------------------------------------
    def node(self, F0, assume, depth):
        """Returns (ProofNode, external needs) or None."""
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Budget
        new = [(f, ("assume", (), None)) for f in assume]
        F, deriv = self.saturate(F0, new)
        close = self.closing(F)
        if close is not None:
            need = {(self.U.zero, self.U.one)} if close[0] == "collapse" else {close[1]}
            return self._finish(assume, deriv, need, close)
        if depth == 0 or (F, depth) in self.failed:
            return None
        for rule, inst, prem, disjuncts in self.instances(F):
            kids = []
            for d in disjuncts:
                r = self.node(F, [d], depth - 1)
                if r is None:
                    break
                kids.append(r)
            else:
                need = set()
                for _, ext in kids:
                    need |= ext
                if prem is not None:
                    need.add(prem)
                close = ("split", rule, inst, [k for k, _ in kids])
                return self._finish(assume, deriv, need, close)
        self.failed.add((F, depth))
        return None

    def _finish(self, assume, deriv, need, close):
        # backward slice of the local derivations
        used, stack = set(), [f for f in need if f in deriv]
        while stack:
            f = stack.pop()
            if f in used:
                continue
            used.add(f)
            for p in deriv[f][1]:
                if p in deriv and p not in used:
                    stack.append(p)
        ext = set()
        for f in need:
            if f not in deriv:
                ext.add(f)
        for f in used:
            for p in deriv[f][1]:
                if p not in deriv:
                    ext.add(p)
        pos = {f: i for i, f in enumerate(deriv)}
        order = sorted(used, key=pos.__getitem__)
        return (assume, [(f, deriv[f]) for f in order if deriv[f][0] != "assume"], close), ext

    def tree_node(self, raw):
        U = self.U
        t = U.terms
        assume, steps, close = raw
        at = lambda f: DivAtom(t[f[0]], t[f[1]])
        node = ProofNode([at(f) for f in assume])
        for f, (rule, prem, c) in steps:
            node.steps.append(Step(at(f), rule, tuple(at(p) for p in prem), None if c is None else t[c]))
        if close[0] == "collapse":
            node.close = ("collapse",)
        elif close[0] == "goal":
            node.close = ("goal", at(close[1]))
        else:
            _, rule, inst, kids = close
            node.close = ("split", rule, tuple(t[i] for i in inst), [self.tree_node(k) for k in kids])
        return node


def dyn_entails(R: RingPresentation, hyps: Sequence[DivAtom], goals: Sequence[DivAtom], depth: int = 3,
                seeds: Sequence = (), max_nodes: int = 5000):
    """Proved(ProofTree) or Unknown.  ``seeds`` are elements x of the small
    ring, each contributing the axiom 1 | x.  Depths 0..depth are tried in
    turn, so a proof found at some depth is found at every larger one."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    hyps = tuple(DivAtom(R.element(h.a), R.element(h.b)) for h in hyps)
    goals = tuple(DivAtom(R.element(g.a), R.element(g.b)) for g in goals)
    seeds = tuple(R.element(s) for s in seeds)
    S = _Search(R, hyps, goals, seeds, max_nodes)
    try:
        for d in range(depth + 1):
            r = S.node(frozenset(), S.hyps, d)
            if r is not None:
                root = S.tree_node(r[0])
                return proved(ProofTree(R, hyps, goals, seeds, root, d))
    except _Budget:
        return unknown(f"node budget {max_nodes} exhausted")
    return unknown(f"depth {depth}")


# -- independent validator -------------------------------------------------

def _step_ok(s: Step, known, R, seeds):
    a, b = s.fact.a, s.fact.b
    for p in s.premises:
        if p not in known:
            return f"premise {p} not established"
    if s.rule == "av1":
        return None if (a == R.one and b == -R.one and not s.premises) else "av1 must be 1 | -1"
    if s.rule == "seed":
        return None if (a == R.one and b in seeds and not s.premises) else "not a seeded atom 1 | x"
    if s.rule == "av2":
        if len(s.premises) != 1 or s.c is None:
            return "av2 takes one premise and a multiplier"
        p = s.premises[0]
        ok = a == p.a * s.c and b == p.b * s.c
        return None if ok else "av2 conclusion is not (a c) | (b c)"
    if s.rule == "Av1":
        if len(s.premises) != 2:
            return "Av1 takes two premises"
        p, q = s.premises
        return None if (p.b == q.a and a == p.a and b == q.b) else "Av1 mismatch"
    if s.rule == "Av2":
        if len(s.premises) != 2:
            return "Av2 takes two premises"
        p, q = s.premises
        return None if (p.a == q.a and a == p.a and b == p.b + q.b) else "Av2 mismatch"
    return f"unknown rule {s.rule!r}"


def replay_report(tree: ProofTree) -> Check:
    R = tree.ring
    seeds = set(tree.seeds)
    goals = set(tree.goals)
    av1 = DivAtom(R.one, -R.one)

    def walk(node, known, path):
        known = set(known) | set(node.assume)
        for i, s in enumerate(node.steps):
            err = _step_ok(s, known, R, seeds)
            if err:
                return Check(False, f"node {path} step {i}: {err}")
            known.add(s.fact)
        c = node.close
        if not c:
            return Check(False, f"node {path}: open")
        if c[0] == "collapse":
            ok = DivAtom(R.zero, R.one) in known
            return Check(ok, "ok" if ok else f"node {path}: 0 | 1 not established")
        if c[0] == "goal":
            g = c[1]
            if g not in goals:
                return Check(False, f"node {path}: {g} is not a goal")
            ok = g in known or g == av1
            return Check(ok, "ok" if ok else f"node {path}: goal {g} not established")
        if c[0] != "split":
            return Check(False, f"node {path}: bad closure {c[0]!r}")
        _, rule, inst, kids = c
        if rule == "AV1":
            a, b = inst
            expect = [[DivAtom(a, b)], [DivAtom(b, a)]]
        elif rule == "AV2":
            a, b, x = inst
            if DivAtom(a * x, b * x) not in known:
                return Check(False, f"node {path}: AV2 premise {a * x} | {b * x} not established")
            expect = [[DivAtom(a, b)], [DivAtom(R.zero, x)]]
        else:
            return Check(False, f"node {path}: unknown branching rule {rule!r}")
        if len(kids) != 2:
            return Check(False, f"node {path}: {rule} needs two branches")
        for k, (kid, e) in enumerate(zip(kids, expect)):
            if list(kid.assume) != e:
                return Check(False, f"node {path}.{k}: branch does not assume the {rule} disjunct")
            r = walk(kid, known, f"{path}.{k}")
            if not r:
                return r
        return Check(True, "ok")

    root = tree.root
    if list(root.assume) != list(tree.hyps):
        return Check(False, "root: assumptions differ from the hypotheses")
    return walk(root, set(), "root")


def replay_proof(tree: ProofTree) -> bool:
    return replay_report(tree).ok
