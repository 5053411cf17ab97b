"""Coefficient fields: the rationals and prime fields F_p."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field. ``p == 0`` means Q, otherwise F_p.

    Rational coefficients are always stored as ``Fraction`` and prime-field
    coefficients as ints in ``range(p)``.
    """

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field characteristic {self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, value) -> Fraction | int:
        if self.p == 0:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, (int, str)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, Fraction):
            return (value.numerator * self.inv(value.denominator)) % self.p
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def inv(self, c):
        if self.p == 0:
            if c == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(c)
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(c, self.p - 2, self.p)

    def div(self, a, b):
        if self.p == 0:
            return Fraction(a) / b
        return (a * self.inv(b)) % self.p

    def fmt(self, c) -> str:
        if self.p == 0:
            return str(c)
        return str(c % self.p)

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
