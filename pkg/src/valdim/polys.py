"""Sparse multivariate polynomials over Q or F_p, optionally Laurent.

A polynomial is a dict from exponent tuples to nonzero coefficients.  The
text grammar (shared with the command line) is implemented by
:func:`parse_poly`; :func:`format_poly` prints in a form the parser reads
back.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fields import QQ, FieldSpec

Exps = tuple


def add_exps(e: Exps, f: Exps) -> Exps:
    return tuple(a + b for a, b in zip(e, f))


def sub_exps(e: Exps, f: Exps) -> Exps:
    return tuple(a - b for a, b in zip(e, f))


def divides(e: Exps, f: Exps) -> bool:
    """True when the monomial ``e`` divides ``f``."""
    return all(a <= b for a, b in zip(e, f))


def lcm_exps(e: Exps, f: Exps) -> Exps:
    return tuple(max(a, b) for a, b in zip(e, f))


class Poly:
    __slots__ = ("nvars", "terms", "field", "laurent", "_hash")

    def __init__(self, nvars: int, terms: Mapping | None = None,
                 field: FieldSpec = QQ, laurent: bool = False):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if not laurent and any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {e} of a non-Laurent polynomial")
            c = field(c)
            if c:
                clean[e] = c
        self.nvars = nvars
        self.terms = clean
        self.field = field
        self.laurent = laurent
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, field, laurent):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.field = field
        p.laurent = laurent
        p._hash = None
        return p

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars, field=QQ, laurent=False):
        return cls._raw(nvars, {}, field, laurent)

    @classmethod
    def const(cls, nvars, c, field=QQ, laurent=False):
        return cls(nvars, {(0,) * nvars: c}, field, laurent)

    @classmethod
    def one(cls, nvars, field=QQ, laurent=False):
        return cls.const(nvars, 1, field, laurent)

    @classmethod
    def var(cls, nvars, i, field=QQ, laurent=False):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, field, laurent)

    @classmethod
    def monomial(cls, e, c=1, field=QQ, laurent=False):
        return cls(len(e), {tuple(e): c}, field, laurent)

    # basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, self.field(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.nvars == other.nvars and self.field == other.field
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: self.field(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic ---------------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other, self.field, self.laurent)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        mod = self.field.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if mod:
                v %= mod
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out, self.field, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        mod = self.field.p
        out = {e: (-c) % mod if mod else -c for e, c in self.terms.items()}
        return Poly._raw(self.nvars, out, self.field, self.laurent)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        mod = self.field.p
        out: dict = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                v = out.get(g, 0) + c * d
                if mod:
                    v %= mod
                out[g] = v
        out = {e: c for e, c in out.items() if c}
        return Poly._raw(self.nvars, out, self.field, self.laurent or other.laurent)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = self.field(c)
        if not c:
            return Poly.zero(self.nvars, self.field, self.laurent)
        mod = self.field.p
        if mod:
            out = {e: (v * c) % mod for e, v in self.terms.items()}
        else:
            out = {e: v * c for e, v in self.terms.items()}
        return Poly._raw(self.nvars, out, self.field, self.laurent)

    def mul_term(self, e: Exps, c=1) -> "Poly":
        c = self.field(c)
        if not c:
            return Poly.zero(self.nvars, self.field, self.laurent)
        mod = self.field.p
        out = {}
        for f, v in self.terms.items():
            w = v * c
            out[tuple(a + b for a, b in zip(e, f))] = w % mod if mod else w
        laurent = self.laurent or any(a < 0 for a in e)
        return Poly._raw(self.nvars, out, self.field, laurent)

    def __pow__(self, k: int):
        if k < 0:
            if not self.laurent:
                raise ValueError("negative power of a non-Laurent polynomial")
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            inv = self.field.inv(c)
            coeff = inv ** -k if self.field.p == 0 else pow(inv, -k, self.field.p)
            return Poly(self.nvars, {tuple(a * k for a in e): coeff}, self.field, True)
        result = Poly.one(self.nvars, self.field, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div_monomial(self, e: Exps) -> "Poly":
        return self.mul_term(tuple(-a for a in e))

    # variable bookkeeping -----------------------------------------------
    def embed(self, nvars: int, positions: Sequence[int]) -> "Poly":
        """Map variable i to variable positions[i] of a ring with ``nvars`` variables."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, a in enumerate(e):
                f[positions[i]] += a
            out[tuple(f)] = c
        return Poly._raw(nvars, out, self.field, self.laurent)

    def drop_leading(self, k: int) -> "Poly":
        """Forget the first k variables, which must not occur."""
        out = {}
        for e, c in self.terms.items():
            if any(e[:k]):
                raise ValueError("polynomial involves an eliminated variable")
            out[e[k:]] = c
        return Poly._raw(self.nvars - k, out, self.field, self.laurent)

    def involves(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        return format_poly(self, names)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.to_str()!r})"


def poly_arith(op: str, a: Poly, b) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError("pow exponent must be a nonnegative integer")
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def grlex_sort_key(e: Exps):
    return (sum(e), e)


# printing ---------------------------------------------------------------

def _default_names(n):
    return [f"x{i}" for i in range(n)]


def format_poly(p: Poly, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else _default_names(p.nvars)
    if len(names) != p.nvars:
        raise ValueError("wrong number of variable names")
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, key=grlex_sort_key, reverse=True):
        c = p.terms[e]
        neg = p.field.p == 0 and c < 0
        mag = -c if neg else c
        factors = []
        for name, a in zip(names, e):
            if a == 1:
                factors.append(name)
            elif a:
                factors.append(f"{name}^{a}")
        coeff = p.field.fmt(mag)
        if factors:
            body = "*".join(factors if coeff == "1" else [coeff] + factors)
        else:
            body = coeff
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# parsing ----------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/])|(?P<bad>\S))")


def _tokenize(text):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError("unexpected trailing input", pos)
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, names, field, laurent):
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.n = len(names)
        self.field = field
        self.laurent = laurent

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self):
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            if v == "/":
                raise ParseError("division is not supported (use a fraction type)", pos)
            raise ParseError(f"unexpected token {v!r} (implicit multiplication is not allowed)", pos)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while True:
            kind, v, pos = self.peek()
            if v == "*":
                self.take()
                p = p * self.factor()
            elif v == "/":
                raise ParseError("division is not supported (use a fraction type)", pos)
            else:
                return p

    def factor(self):
        kind, v, pos = self.peek()
        if v == "-":
            self.take()
            return -self.factor()
        if v == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        kind, v, pos = self.peek()
        if v != "^":
            return base
        self.take()
        k = self.exponent()
        if self.peek()[1] == "^":
            raise ParseError("chained exponents are ambiguous; add parentheses", self.peek()[2])
        if k < 0:
            if not self.laurent:
                raise ParseError("negative exponent outside a Laurent document", pos)
            if len(base.terms) != 1:
                raise ParseError("negative power of a non-monomial", pos)
        return base ** k

    def exponent(self):
        kind, v, pos = self.take()
        if v == "(":
            k = self.exponent()
            self.expect(")")
            return k
        sign = 1
        if v == "-":
            sign = -1
            kind, v, pos = self.take()
        if kind != "num" or "/" in v:
            raise ParseError("exponent must be an integer literal", pos)
        return sign * int(v)

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Poly.const(self.n, Fraction(v), self.field, self.laurent)
        if kind == "id":
            if v not in self.index:
                raise ParseError(f"unknown variable {v!r}", pos)
            return Poly.var(self.n, self.index[v], self.field, self.laurent)
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        if v == "/":
            raise ParseError("division is not supported (use a fraction type)", pos)
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def parse_poly(text: str, vars: Sequence[str], field: FieldSpec = QQ,
               laurent: bool = False) -> Poly:
    if not isinstance(text, str):
        raise ParseError("polynomial text must be a string", 0)
    if len(set(vars)) != len(vars):
        raise ValueError("duplicate variable names")
    p = _Parser(text, list(vars), field, laurent).parse()
    if not laurent and p.laurent:
        raise ParseError("negative exponent outside a Laurent document", 0)
    return Poly._raw(p.nvars, p.terms, field, laurent)


def monomials_upto(nvars: int, d: int) -> Iterable[Exps]:
    """All exponent vectors in N^nvars of total degree <= d."""
    if nvars == 0:
        yield ()
        return
    for a in range(d + 1):
        for rest in monomials_upto(nvars - 1, d - a):
            yield (a,) + rest
