"""Exact Gaussian elimination over the golden field."""
from __future__ import annotations

from .goldnum import Gold


def reduce_against(vec: list[Gold], rows: list[list[Gold]], pivots: list[int]) -> list[Gold]:
    """Reduce vec modulo echelon rows (leading coefficient 1 at each pivot)."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, row)]
    return v


class Echelon:
    """Incrementally maintained reduced row echelon basis."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Gold]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: list[Gold]) -> bool:
        return not any(reduce_against(vec, self.rows, self.pivots))

    def add(self, vec: list[Gold]) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        v = reduce_against(vec, self.rows, self.pivots)
        pivot = next((i for i, a in enumerate(v) if a), None)
        if pivot is None:
            return False
        inv = v[pivot].inverse()
        v = [a * inv for a in v]
        # keep reduced form: clear the new pivot column in existing rows
        for k, row in enumerate(self.rows):
            if row[pivot]:
                c = row[pivot]
                self.rows[k] = [a - c * b for a, b in zip(row, v)]
        pos = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.rows))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, pivot)
        return True


def rank(vectors: list[list[Gold]]) -> int:
    if not vectors:
        return 0
    ech = Echelon(len(vectors[0]))
    for v in vectors:
        ech.add(v)
    return ech.dim


def nullity(vectors: list[list[Gold]]) -> int:
    """Dimension of the solution space of the homogeneous system with these rows."""
    if not vectors:
        return 0
    return len(vectors[0]) - rank(vectors)
