"""Monomial orders: lex with an explicit priority list and matrix orders <_M.

For a matrix M, e <_M f iff M.e <_lex M.f.  Orders act on Z^n, so they
also compare Laurent exponents.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class OrderSpec:
    kind: str
    priority: tuple = ()
    rows: tuple = ()

    def __post_init__(self):
        if self.kind == "lex":
            pr = tuple(int(i) for i in self.priority)
            object.__setattr__(self, "priority", pr)
            if sorted(pr) != list(range(len(pr))) or not pr:
                raise ValueError(f"lex priority {pr} is not a permutation of 0..n-1")
        elif self.kind == "matrix":
            rows = tuple(tuple(int(x) for x in r) for r in self.rows)
            object.__setattr__(self, "rows", rows)
            n = len(rows)
            if n == 0 or any(len(r) != n for r in rows):
                raise ValueError("order matrix must be square and nonempty")
            if any(x < 0 for r in rows for x in r):
                raise ValueError("order matrix entries must be nonnegative integers")
            if any(x <= 0 for x in rows[0]):
                raise ValueError("first row of the order matrix must be positive")
            if _det(rows) == 0:
                raise ValueError("order matrix is singular")
        else:
            raise ValueError(f"unknown order kind {self.kind!r}")

    @property
    def nvars(self) -> int:
        return len(self.priority) if self.kind == "lex" else len(self.rows)

    def key(self, e: Sequence[int]) -> tuple:
        if len(e) != self.nvars:
            raise ValueError(f"exponent length {len(e)} does not match order dimension {self.nvars}")
        if self.kind == "lex":
            return tuple(e[i] for i in self.priority)
        return tuple(sum(a * b for a, b in zip(r, e)) for r in self.rows)

    def keyfunc(self):
        """A memoizing key function for use inside one computation."""
        cache = {}
        key = self.key

        def k(e):
            v = cache.get(e)
            if v is None:
                v = cache[e] = key(e)
            return v
        return k

    def graded(self) -> bool:
        return self.kind == "matrix" and all(x == 1 for x in self.rows[0])

    def admissible(self) -> bool:
        return True  # enforced at construction

    def __str__(self):
        if self.kind == "lex":
            return f"lex{list(self.priority)}"
        return f"matrix{[list(r) for r in self.rows]}"


class EliminationOrder:
    """Block order: graded lex on the first k variables, then grlex on the rest.

    Any polynomial whose leading monomial avoids the first block lies
    entirely in the remaining variables, which is what elimination needs.
    """

    kind = "block"

    def __init__(self, nvars: int, k: int):
        self._n = nvars
        self.k = k

    @property
    def nvars(self):
        return self._n

    def key(self, e):
        k = self.k
        a, b = e[:k], e[k:]
        return (sum(a),) + tuple(a) + (sum(b),) + tuple(b)

    def keyfunc(self):
        cache = {}
        key = self.key

        def k(e):
            v = cache.get(e)
            if v is None:
                v = cache[e] = key(e)
            return v
        return k

    def graded(self):
        return False

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and (self._n, self.k) == (other._n, other.k)

    def __hash__(self):
        return hash(("block", self._n, self.k))


def lex(n: int, priority: Sequence[int] | None = None) -> OrderSpec:
    return OrderSpec("lex", priority=tuple(range(n)) if priority is None else tuple(priority))


def lex_desc(n: int) -> OrderSpec:
    """Lex with the last variable most significant: X_{n-1} > ... > X_0."""
    return OrderSpec("lex", priority=tuple(range(n - 1, -1, -1)))


def matrix_order(rows) -> OrderSpec:
    return OrderSpec("matrix", rows=tuple(tuple(r) for r in rows))


def grlex(n: int) -> OrderSpec:
    if n < 1:
        raise ValueError("grlex needs at least one variable")
    rows = [[1] * n] + [[1 if j == i else 0 for j in range(n)] for i in range(n - 1)]
    return matrix_order(rows)


def compare(e, f, o) -> int:
    """-1, 0 or 1 as e is less than, equal to or greater than f."""
    a, b = o.key(e), o.key(f)
    return (a > b) - (a < b)


def _terms(P):
    terms = P.terms if hasattr(P, "terms") else P
    if not terms:
        raise ValueError("zero polynomial has no leading or trailing term")
    return terms


def trailing_term(P, o):
    terms = _terms(P)
    e = min(terms, key=o.key)
    return e, terms[e]


def leading_term(P, o):
    terms = _terms(P)
    e = max(terms, key=o.key)
    return e, terms[e]
