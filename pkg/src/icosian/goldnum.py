"""Exact arithmetic in the golden field Q(sqrt 5).

A value is stored as (na + nb*sqrt5)/den with arbitrary-precision integers,
normalized so den > 0 and gcd(na, nb, den) = 1.  Canonical form is enforced
at construction, so structural equality is field equality and Gold values
can be used directly as dictionary keys.  The rational components are
exposed as Fractions via the ``a`` and ``b`` properties.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

_SQRT5_FLOAT = 5 ** 0.5

Ratish = int | Fraction


class Gold:
    """An element a + b*sqrt(5) of Q(sqrt5), exact."""

    __slots__ = ("na", "nb", "den")

    def __init__(self, na: int, nb: int = 0, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            na, nb, den = -na, -nb, -den
        g = gcd(na, nb, den)
        if g > 1:
            na //= g
            nb //= g
            den //= g
        self.na = na
        self.nb = nb
        self.den = den

    @staticmethod
    def of(a: Ratish, b: Ratish = 0) -> "Gold":
        a = Fraction(a)
        b = Fraction(b)
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return Gold(a.numerator * (den // a.denominator),
                    b.numerator * (den // b.denominator), den)

    @property
    def a(self) -> Fraction:
        return Fraction(self.na, self.den)

    @property
    def b(self) -> Fraction:
        return Fraction(self.nb, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, Gold):
            return self.na == other.na and self.nb == other.nb and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Gold.of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.na, self.nb, self.den))

    def __bool__(self) -> bool:
        return bool(self.na or self.nb)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Gold(self.na * other.den + other.na * self.den,
                    self.nb * other.den + other.nb * self.den,
                    self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Gold(self.na * other.den - other.na * self.den,
                    self.nb * other.den - other.nb * self.den,
                    self.den * other.den)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __neg__(self) -> "Gold":
        return Gold(-self.na, -self.nb, self.den)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b*s5)(c + d*s5) = (ac + 5bd) + (ad + bc)*s5
        return Gold(self.na * other.na + 5 * self.nb * other.nb,
                    self.na * other.nb + self.nb * other.na,
                    self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Gold":
        # 1/((a + b*s5)) = (a - b*s5)/(a^2 - 5 b^2); the norm vanishes only at 0
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        n = self.na * self.na - 5 * self.nb * self.nb
        return Gold(self.den * self.na, -self.den * self.nb, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def galois(self) -> "Gold":
        """The field automorphism sqrt5 -> -sqrt5."""
        return Gold(self.na, -self.nb, self.den)

    def to_float(self) -> float:
        """Approximate double-precision value (display only)."""
        return (self.na + self.nb * _SQRT5_FLOAT) / self.den

    @property
    def is_rational(self) -> bool:
        return self.nb == 0

    @property
    def is_integer(self) -> bool:
        return self.nb == 0 and self.den == 1

    def __str__(self) -> str:
        if self.nb == 0:
            return _fmt_rat(self.a)
        if self.b == 1:
            root = "√5"
        elif self.b == -1:
            root = "-√5"
        else:
            root = _fmt_rat(self.b) + "√5"
        if self.na == 0:
            return root
        sep = "+" if not root.startswith("-") else ""
        return _fmt_rat(self.a) + sep + root

    def __repr__(self) -> str:
        return f"Gold({self.na}, {self.nb}, {self.den})"

    def to_json(self) -> dict:
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
        }

    @staticmethod
    def from_json(d: dict) -> "Gold":
        return Gold.of(Fraction(*d["a"]), Fraction(*d["b"]))


def _coerce(x):
    if isinstance(x, Gold):
        return x
    if isinstance(x, int):
        return Gold(x)
    if isinstance(x, Fraction):
        return Gold(x.numerator, 0, x.denominator)
    return NotImplemented


def _fmt_rat(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


ZERO = Gold(0)
ONE = Gold(1)
SQRT5 = Gold(0, 1)
HALF = Gold(1, 0, 2)
TAU = Gold(1, 1, 2)     # (1 + sqrt5)/2
SIGMA = Gold(1, -1, 2)  # (1 - sqrt5)/2
