"""2x2 quaternion matrices and rank-2 spinors.

Spinors form a right quaternion module; matrices act from the left, so the
action commutes with right scalar multiplication.  The Hermitian form
conjugates its first argument.
"""
from __future__ import annotations

from dataclasses import dataclass

from .goldnum import Gold
from .quat import Quat, ONE as Q_ONE, ZERO as Q_ZERO


@dataclass(frozen=True, slots=True)
class Spinor2:
    """Column vector (c1, c2) in the rank-2 right quaternion module."""

    c1: Quat
    c2: Quat

    def scale(self, s: Quat) -> "Spinor2":
        """Right scalar multiplication."""
        return Spinor2(self.c1 * s, self.c2 * s)

    def __add__(self, other: "Spinor2") -> "Spinor2":
        return Spinor2(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "Spinor2") -> "Spinor2":
        return Spinor2(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "Spinor2":
        return Spinor2(-self.c1, -self.c2)

    def to_json(self) -> list:
        return [self.c1.to_json(), self.c2.to_json()]

    def __str__(self) -> str:
        return f"({self.c1}, {self.c2})"


def inner(r: Spinor2, x: Spinor2) -> Quat:
    """Hermitian form, conjugate-linear in the first slot."""
    return r.c1.conj() * x.c1 + r.c2.conj() * x.c2


def spinor_norm2(r: Spinor2) -> Quat:
    return inner(r, r)


@dataclass(frozen=True, slots=True)
class QMat2:
    m11: Quat
    m12: Quat
    m21: Quat
    m22: Quat

    @staticmethod
    def diag(a: Quat, b: Quat) -> "QMat2":
        return QMat2(a, Q_ZERO, Q_ZERO, b)

    @staticmethod
    def offdiag(a: Quat, b: Quat) -> "QMat2":
        return QMat2(Q_ZERO, a, b, Q_ZERO)

    def __mul__(self, other):
        if isinstance(other, QMat2):
            return QMat2(
                self.m11 * other.m11 + self.m12 * other.m21,
                self.m11 * other.m12 + self.m12 * other.m22,
                self.m21 * other.m11 + self.m22 * other.m21,
                self.m21 * other.m12 + self.m22 * other.m22,
            )
        return NotImplemented

    def __add__(self, other: "QMat2") -> "QMat2":
        return QMat2(self.m11 + other.m11, self.m12 + other.m12,
                     self.m21 + other.m21, self.m22 + other.m22)

    def __sub__(self, other: "QMat2") -> "QMat2":
        return QMat2(self.m11 - other.m11, self.m12 - other.m12,
                     self.m21 - other.m21, self.m22 - other.m22)

    def __neg__(self) -> "QMat2":
        return QMat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def scale(self, s) -> "QMat2":
        """Left scalar multiplication (entrywise s * m_ij)."""
        if isinstance(s, Quat):
            return QMat2(s * self.m11, s * self.m12, s * self.m21, s * self.m22)
        return QMat2(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)

    def apply(self, x: Spinor2) -> Spinor2:
        return Spinor2(
            self.m11 * x.c1 + self.m12 * x.c2,
            self.m21 * x.c1 + self.m22 * x.c2,
        )

    def galois(self) -> "QMat2":
        return QMat2(self.m11.galois(), self.m12.galois(),
                     self.m21.galois(), self.m22.galois())

    def complex_char_trace(self) -> Gold:
        """2*(Re m11 + Re m22): the complex trace of the 4-dim complexification."""
        return (self.m11.w + self.m22.w) * 2

    def key(self) -> str:
        """Canonical serialization, usable as an indexing key."""
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"

    def to_json(self) -> list:
        return [[self.m11.to_json(), self.m12.to_json()],
                [self.m21.to_json(), self.m22.to_json()]]

    def __str__(self) -> str:
        return self.key()


IDENTITY = QMat2.diag(Q_ONE, Q_ONE)
MINUS_IDENTITY = -IDENTITY
