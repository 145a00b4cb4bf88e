"""Quaternions over the golden field, and the distinguished scalars.

The two scalars omega (order 3) and phi (order 4) satisfy
phi^2 = (omega*phi)^2 = omega + omega^2 = -1 and generate a group of
order 12; theta = omega - omega^2 = i + j + k squares to -3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .goldnum import Gold, ZERO as G_ZERO, SIGMA, TAU
from .groupkit import FiniteGroup


@dataclass(frozen=True, slots=True)
class Quat:
    """w + x i + y j + z k with Gold coefficients."""

    w: Gold
    x: Gold
    y: Gold
    z: Gold

    @staticmethod
    def of(w=0, x=0, y=0, z=0) -> "Quat":
        return Quat(_g(w), _g(x), _g(y), _g(z))

    def __add__(self, other: "Quat") -> "Quat":
        return Quat(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quat") -> "Quat":
        return Quat(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quat":
        return Quat(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quat):
            a, b, c, d = self.w, self.x, self.y, self.z
            e, f, g, h = other.w, other.x, other.y, other.z
            return Quat(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        if isinstance(other, (Gold, int, Fraction)):
            s = _g(other)
            return Quat(self.w * s, self.x * s, self.y * s, self.z * s)
        return NotImplemented

    def __rmul__(self, other):
        # scalars in Gold are central, so left and right coincide here
        if isinstance(other, (Gold, int, Fraction)):
            return self * other
        return NotImplemented

    def conj(self) -> "Quat":
        return Quat(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> Gold:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quat":
        return self.conj() * self.norm2().inverse()

    def galois(self) -> "Quat":
        return Quat(self.w.galois(), self.x.galois(), self.y.galois(), self.z.galois())

    @property
    def is_pure(self) -> bool:
        return not self.w

    def __str__(self) -> str:
        parts = []
        for coeff, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if coeff:
                s = str(coeff)
                if unit and s == "1":
                    s = ""
                elif unit and s == "-1":
                    s = "-"
                parts.append(s + unit if unit else s)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def to_json(self) -> list:
        return [c.to_json() for c in (self.w, self.x, self.y, self.z)]


def _g(v) -> Gold:
    return v if isinstance(v, Gold) else Gold.of(v)


ZERO = Quat.of(0)
ONE = Quat.of(1)
I = Quat.of(0, 1)
J = Quat.of(0, 0, 1)
K = Quat.of(0, 0, 0, 1)

h2 = Fraction(1, 2)
OMEGA = Quat.of(-h2, h2, h2, h2)
# (i - sigma j - tau k)/2; the 1/2 makes it a unit with PHI^2 = -1
PHI = Quat(G_ZERO, Gold.of(h2), SIGMA * Gold.of(-h2), TAU * Gold.of(-h2))
THETA = OMEGA - OMEGA * OMEGA  # = i + j + k, squares to -3


@cache
def scalar_group() -> FiniteGroup[Quat]:
    """The group generated by omega and phi; must close at order 12."""
    group = FiniteGroup.closure([OMEGA, PHI], lambda p, q: p * q, ONE, cap=100)
    if len(group) != 12:
        raise ValueError(f"scalar group closed at order {len(group)}, expected 12")
    return group


def so3_image() -> tuple[int, bool]:
    """Order of the scalar group mod {+-1} and whether the quotient is nonabelian."""
    group = scalar_group()
    sign_class = {}
    for i, q in enumerate(group.elements):
        key = min(i, group.index(-q))
        sign_class[i] = key
    order = len(set(sign_class.values()))
    nonabelian = any(
        x * y != y * x and x * y != -(y * x)
        for x in group.elements
        for y in group.elements
    )
    return order, nonabelian
