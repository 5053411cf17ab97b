"""Distributive lattices presented by entailment relations.

Terms are kept in disjunctive normal form: a join of meets, each meet a
frozenset of atoms, with no meet containing another.  The empty join is
bottom and the join holding the empty meet is top.  Deciding s <= t
reduces to oracle queries A |- B, one for each meet A of s and each clause
B of the conjunctive normal form of t.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

CNF_CAP = 4096


class Status(enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    evidence: Any = None

    @property
    def proved(self):
        return self.status is Status.PROVED

    @property
    def refuted(self):
        return self.status is Status.REFUTED

    @property
    def unknown(self):
        return self.status is Status.UNKNOWN


def proved(evidence=None) -> Verdict:
    return Verdict(Status.PROVED, evidence)


def refuted(evidence=None) -> Verdict:
    return Verdict(Status.REFUTED, evidence)


def unknown(bound=None) -> Verdict:
    return Verdict(Status.UNKNOWN, bound)


def _antichain(meets: Iterable[frozenset]) -> frozenset:
    meets = sorted(set(meets), key=len)
    kept: list = []
    for m in meets:
        if not any(k <= m for k in kept):
            kept.append(m)
    return frozenset(kept)


class LatticeTerm:
    __slots__ = ("meets",)

    def __init__(self, meets: Iterable[Iterable] = ()):
        self.meets = _antichain(frozenset(m) for m in meets)

    @classmethod
    def atom(cls, a) -> "LatticeTerm":
        return cls([[a]])

    @classmethod
    def top(cls) -> "LatticeTerm":
        return cls([[]])

    @classmethod
    def bottom(cls) -> "LatticeTerm":
        return cls([])

    @classmethod
    def meet_of(cls, atoms: Iterable) -> "LatticeTerm":
        return cls([list(atoms)])

    @classmethod
    def join_of(cls, atoms: Iterable) -> "LatticeTerm":
        return cls([[a] for a in atoms])

    def is_top(self):
        return frozenset() in self.meets

    def is_bottom(self):
        return not self.meets

    def atoms(self) -> set:
        return set().union(*self.meets) if self.meets else set()

    def __and__(self, other: "LatticeTerm") -> "LatticeTerm":
        return LatticeTerm(a | b for a in self.meets for b in other.meets)

    def __or__(self, other: "LatticeTerm") -> "LatticeTerm":
        return LatticeTerm(self.meets | other.meets)

    def meet(self, other):
        return self & other

    def join(self, other):
        return self | other

    def cnf(self, cap: int = CNF_CAP):
        """Clauses (frozensets of atoms) whose meet equals this term, or None past the cap."""
        if self.is_top():
            return []
        if self.is_bottom():
            return [frozenset()]
        size = 1
        for m in self.meets:
            size *= len(m)
            if size > cap:
                return None
        meets = sorted(self.meets, key=lambda m: sorted(map(repr, m)))
        clauses = {frozenset(choice) for choice in itertools.product(*[sorted(m, key=repr) for m in meets])}
        return sorted(_antichain(clauses), key=lambda c: (len(c), sorted(map(repr, c))))

    def __eq__(self, other):
        return isinstance(other, LatticeTerm) and self.meets == other.meets

    def __hash__(self):
        return hash(self.meets)

    def __repr__(self):
        if self.is_bottom():
            return "0"
        if self.is_top():
            return "1"
        parts = sorted(" & ".join(sorted(map(str, m))) for m in self.meets)
        return " | ".join(f"({p})" if "&" in p and len(parts) > 1 else p for p in parts)


def term_ops(op: str, a: LatticeTerm, b: LatticeTerm) -> LatticeTerm:
    if op == "meet":
        return a & b
    if op == "join":
        return a | b
    raise ValueError(f"unknown lattice operation {op!r}")


class EntailmentOracle:
    """decide(A, B) answers whether the meet of A is below the join of B."""

    domain = "abstract"

    def decide(self, A: frozenset, B: frozenset) -> Verdict:
        raise NotImplementedError

    def check(self, A: frozenset, B: frozenset, evidence) -> bool:
        """Validate a stored proof object for A |- B."""
        return False


def _query(o: EntailmentOracle, A, B, hints=()) -> Verdict:
    if A & B:
        return proved("syntactic")
    for ev in hints:
        if o.check(A, B, ev):
            return proved(ev)
    return o.decide(A, B)


def leq(s: LatticeTerm, t: LatticeTerm, o: EntailmentOracle, hints=()) -> Verdict:
    if s.is_bottom():
        return proved([])
    clauses = t.cnf()
    if clauses is None:
        return unknown(f"CNF of the right-hand side exceeds {CNF_CAP} clauses")
    evidence = []
    pending = None
    meets = sorted(s.meets, key=lambda m: (len(m), sorted(map(repr, m))))
    for A in meets:
        for B in clauses:
            v = _query(o, A, B, hints)
            if v.refuted:
                return refuted({"lhs": A, "rhs": B, "evidence": v.evidence})
            if v.unknown:
                if pending is None:
                    pending = v.evidence
                continue
            evidence.append((A, B, v.evidence))
    if pending is not None:
        return unknown(pending)
    return proved(evidence)


# entailment tables ------------------------------------------------------

@dataclass(frozen=True)
class EntailmentTable:
    atoms: tuple
    sequents: tuple = ()

    def __post_init__(self):
        atoms = tuple(self.atoms)
        seqs = tuple((frozenset(l), frozenset(r)) for l, r in self.sequents)
        known = set(atoms)
        for l, r in seqs:
            missing = (l | r) - known
            if missing:
                raise ValueError(f"sequent mentions undeclared atoms {sorted(map(str, missing))}")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "sequents", seqs)


@dataclass(frozen=True)
class CutProof:
    """Proof tree over the rules (R), (M) and (T) for a finite table."""

    rule: str              # "R", "M" or "T"
    lhs: frozenset
    rhs: frozenset
    sequent: Any = None    # the table sequent used by (M)
    cut_atom: Any = None
    children: tuple = ()


class TableOracle(EntailmentOracle):
    """Decides A |- B in the entailment relation generated by a table.

    The search applies (R) and (M) where possible and otherwise cuts on an
    atom that occurs in some sequent.  When no atom is left, the branch
    describes a two-valued model refuting the query.
    """

    domain = "table"

    def __init__(self, table: EntailmentTable):
        self.table = table
        relevant = set()
        for l, r in table.sequents:
            relevant |= l | r
        self._relevant = [a for a in table.atoms if a in relevant]
        self._memo: dict = {}

    def _prove(self, A: frozenset, B: frozenset):
        key = (A, B)
        if key in self._memo:
            return self._memo[key]
        result = None
        if A & B:
            result = CutProof("R", A, B)
        else:
            for l, r in self.table.sequents:
                if l <= A and r <= B:
                    result = CutProof("M", A, B, sequent=(l, r))
                    break
        if result is None:
            x = next((a for a in self._relevant if a not in A and a not in B), None)
            if x is None:
                result = ("model", A)
            else:
                left = self._prove(A | {x}, B)
                if isinstance(left, CutProof):
                    right = self._prove(A, B | {x})
                    result = CutProof("T", A, B, cut_atom=x, children=(left, right)) \
                        if isinstance(right, CutProof) else right
                else:
                    result = left
        self._memo[key] = result
        return result

    def decide(self, A, B) -> Verdict:
        A, B = frozenset(A), frozenset(B)
        r = self._prove(A, B)
        if isinstance(r, CutProof):
            return proved(r)
        return refuted({"true_atoms": r[1]})

    def check(self, A, B, evidence) -> bool:
        return isinstance(evidence, CutProof) and check_cut_proof(self.table, evidence) \
            and evidence.lhs <= A and evidence.rhs <= B


def check_cut_proof(table: EntailmentTable, p: CutProof) -> bool:
    if p.rule == "R":
        return bool(p.lhs & p.rhs)
    if p.rule == "M":
        l, r = p.sequent
        return (l, r) in set(table.sequents) and l <= p.lhs and r <= p.rhs
    if p.rule == "T":
        if len(p.children) != 2:
            return False
        a, b = p.children
        x = p.cut_atom
        return (a.lhs == p.lhs | {x} and a.rhs == p.rhs and b.lhs == p.lhs and b.rhs == p.rhs | {x}
                and check_cut_proof(table, a) and check_cut_proof(table, b))
    return False


def table_oracle(t: EntailmentTable) -> TableOracle:
    return TableOracle(t)


def models(t: EntailmentTable, limit: int = 20):
    """All two-valued valuations (as sets of true atoms) satisfying the table."""
    if len(t.atoms) > limit:
        raise ValueError(f"brute force limited to {limit} atoms, table has {len(t.atoms)}")
    out = []
    for bits in itertools.product((False, True), repeat=len(t.atoms)):
        true = frozenset(a for a, b in zip(t.atoms, bits) if b)
        if all(not (l <= true) or (r & true) for l, r in t.sequents):
            out.append(true)
    return out


def brute_force_models(t: EntailmentTable, A, B) -> bool:
    A, B = frozenset(A), frozenset(B)
    return all(not (A <= v) or bool(B & v) for v in models(t))


def term_value(s: LatticeTerm, true: frozenset) -> bool:
    return any(m <= true for m in s.meets)


def brute_force_leq(t: EntailmentTable, s: LatticeTerm, u: LatticeTerm) -> bool:
    return all(not term_value(s, v) or term_value(u, v) for v in models(t))


# complementary sequences -----------------------------------------------

@dataclass
class ComplementaryChain:
    """xs = (x_0..x_n), us = (u_0..u_n) with the top of the chain at index 0.

    The inequalities, in order, are
        1 <= x_0 v u_0,  x_{i-1} ^ u_{i-1} <= x_i v u_i  (1 <= i <= n),  x_n ^ u_n <= 0.
    With n = -1 (empty chain) the single inequality is 1 <= 0.
    """

    xs: list
    us: list
    step_proofs: list = field(default_factory=list)

    def steps(self):
        xs, us = self.xs, self.us
        if len(xs) != len(us):
            raise ValueError("xs and us must have the same length")
        if not xs:
            return [(LatticeTerm.top(), LatticeTerm.bottom())]
        a = [LatticeTerm.atom(x) for x in xs]
        out = [(LatticeTerm.top(), a[0] | us[0])]
        for i in range(1, len(xs)):
            out.append((a[i - 1] & us[i - 1], a[i] | us[i]))
        out.append((a[-1] & us[-1], LatticeTerm.bottom()))
        return out


def descending_indexing(chain: ComplementaryChain):
    """The same inequalities as sequents ``1 |- y_n, x_n ... y_0, x_0 |- 0``.

    Index i of the returned lists corresponds to index n - i of the chain.
    """
    return list(reversed(chain.xs)), list(reversed(chain.us))


def check_complementary(chain: ComplementaryChain, o: EntailmentOracle) -> Verdict:
    steps = chain.steps()
    hints = list(chain.step_proofs) + [None] * (len(steps) - len(chain.step_proofs))
    report = []
    pending = None
    for i, (lhs, rhs) in enumerate(steps):
        h = hints[i]
        if h is None:
            h = ()
        elif not isinstance(h, (list, tuple)):
            h = (h,)
        v = leq(lhs, rhs, o, h)
        if v.refuted:
            return refuted({"step": i, "evidence": v.evidence})
        if v.unknown and pending is None:
            pending = {"step": i, "bound": v.evidence}
        report.append(v)
    if pending is not None:
        return unknown(pending)
    return proved(report)


def enumerate_terms(atoms: Sequence, width: int = 3) -> list:
    """All DNF terms over ``atoms`` whose meets have at most ``width`` atoms.

    Ordered by size so that bottom comes first and top last.
    """
    subsets = [frozenset(c) for k in range(1, width + 1) for c in itertools.combinations(atoms, k)]
    terms = {LatticeTerm.bottom()}
    for k in range(1, len(subsets) + 1):
        for combo in itertools.combinations(subsets, k):
            terms.add(LatticeTerm(combo))
    terms.add(LatticeTerm.top())
    def rank(t):
        if t.is_top():
            return (1, 0, "")
        return (0, sum(len(m) for m in t.meets), repr(t))
    return sorted(terms, key=rank)


def table_searcher(atoms: Sequence, width: int = 3) -> Callable:
    candidates = enumerate_terms(atoms, width)
    return lambda xs: candidates


def kdim_leq_on_tuples(tuples: Sequence[Sequence], searcher: Callable, o: EntailmentOracle):
    """For each tuple, a verified complementary chain or None.

    ``searcher(xs)`` returns either a finished chain or a list of candidate
    terms; in the latter case the chain is found by depth-first search,
    choosing u_0, u_1, ... and checking each inequality as soon as it is
    determined.
    """
    results = []
    for xs in tuples:
        xs = list(xs)
        cand = searcher(xs)
        if isinstance(cand, ComplementaryChain):
            v = check_complementary(cand, o)
            results.append(cand if v.proved else None)
            continue
        results.append(_dfs_chain(xs, list(cand), o))
    return results


def _dfs_chain(xs, cands, o):
    n = len(xs)
    if n == 0:
        chain = ComplementaryChain([], [])
        return chain if check_complementary(chain, o).proved else None
    a = [LatticeTerm.atom(x) for x in xs]
    memo = {}

    def ok(lhs, rhs):
        k = (lhs, rhs)
        if k not in memo:
            memo[k] = leq(lhs, rhs, o).proved
        return memo[k]

    def go(i, us):
        if i == n:
            return us
        for u in cands:
            lhs = LatticeTerm.top() if i == 0 else a[i - 1] & us[-1]
            if not ok(lhs, a[i] | u):
                continue
            if i == n - 1 and not ok(a[i] & u, LatticeTerm.bottom()):
                continue
            found = go(i + 1, us + [u])
            if found is not None:
                return found
        return None

    us = go(0, [])
    if us is None:
        return None
    chain = ComplementaryChain(xs, us)
    return chain if check_complementary(chain, o).proved else None
