"""Exact sparse linear algebra over Q or F_p.

``Span`` keeps an echelon basis of added column vectors together with the
combination of original columns each basis vector stands for, so that a
target vector can be expressed in terms of the columns.  Vectors are dicts
from row labels to nonzero coefficients.  Rows are ordered by ``rowkey``:
every stored vector's pivot is its largest row, so eliminating a pivot only
introduces smaller rows.
"""
from __future__ import annotations

import heapq

from .fields import FieldSpec


def _neg(key):
    return tuple(-k for k in key)


class Span:
    def __init__(self, field: FieldSpec, rowkey):
        self.field = field
        self.rowkey = rowkey
        self.pivots: dict = {}

    def _axpy(self, vec, c, other, heap=None):
        # vec -= c * other, in place
        mod = self.field.p
        for r, v in other.items():
            w = vec.get(r, 0) - c * v
            if mod:
                w %= mod
            if w:
                if heap is not None and r not in vec:
                    heapq.heappush(heap, (_neg(self.rowkey(r)), r))
                vec[r] = w
            else:
                vec.pop(r, None)

    def _reduce(self, vec: dict, combo: dict):
        vec = dict(vec)
        combo = dict(combo)
        heap = [(_neg(self.rowkey(r)), r) for r in vec]
        heapq.heapify(heap)
        seen = set()
        while heap:
            _, r = heapq.heappop(heap)
            if r in seen or r not in vec:
                continue
            piv = self.pivots.get(r)
            if piv is None:
                seen.add(r)
                continue
            c = vec[r]
            pv, pc = piv
            self._axpy(vec, c, pv, heap)
            self._axpy(combo, c, pc)
        return vec, combo

    def add(self, col, vec: dict) -> bool:
        """Add a column; returns False when it is already in the span."""
        vec, combo = self._reduce(vec, {col: 1})
        if not vec:
            return False
        r = max(vec, key=self.rowkey)
        inv = self.field.inv(vec[r])
        mod = self.field.p
        if mod:
            vec = {k: (v * inv) % mod for k, v in vec.items()}
            combo = {k: (v * inv) % mod for k, v in combo.items()}
        else:
            vec = {k: v * inv for k, v in vec.items()}
            combo = {k: v * inv for k, v in combo.items()}
        self.pivots[r] = (vec, combo)
        return True

    def solve_negated(self, target: dict):
        """Coefficients u with sum(u[col] * col) == -target, or None."""
        vec, combo = self._reduce(target, {})
        if vec:
            return None
        return combo

    def solve(self, target: dict):
        u = self.solve_negated(target)
        if u is None:
            return None
        mod = self.field.p
        return {k: ((-v) % mod if mod else -v) for k, v in u.items()}

    @property
    def rank(self):
        return len(self.pivots)
