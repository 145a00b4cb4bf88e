"""Generic finite-group engine over any hashable element type.

Works with any associative multiplication with an identity; groups are built
by breadth-first product closure with a deterministic element ordering, and
all further queries (orders, conjugacy, subgroups, orbits) run on integer
indices against a cached Cayley table.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Generic, Hashable, Iterable, Sequence, TypeVar

T = TypeVar("T", bound=Hashable)


class ClosureError(RuntimeError):
    """Raised when a closure exceeds its cap or an input is inconsistent."""


@dataclass(frozen=True)
class ConjugacyPartition:
    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]


class FiniteGroup(Generic[T]):
    """A finite group as an indexed element list plus a multiplication map.

    Element 0 is the identity.  Each element carries one generator word from
    the closure BFS, usable to transport the group through any homomorphism
    given images of the generators.
    """

    def __init__(
        self,
        elements: list[T],
        mul: Callable[[T, T], T],
        generator_indices: list[int],
        words: list[tuple[int, ...]],
        parent_indices: list[int] | None = None,
    ):
        self.elements = elements
        self.mul = mul
        self.generator_indices = generator_indices
        self.words = words
        self.parent_indices = parent_indices  # set for materialized subgroups
        self._index = {x: i for i, x in enumerate(elements)}
        if len(self._index) != len(elements):
            raise ClosureError("duplicate elements in group construction")

    @classmethod
    def closure(
        cls,
        generators: Sequence[T],
        mul: Callable[[T, T], T],
        identity: T,
        cap: int = 10_000,
    ) -> "FiniteGroup[T]":
        if not generators:
            raise ClosureError("empty generator list")
        elements: list[T] = [identity]
        words: list[tuple[int, ...]] = [()]
        index = {identity: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j, gen in enumerate(generators):
                p = mul(elements[i], gen)
                if p not in index:
                    if len(elements) >= cap:
                        raise ClosureError(f"closure exceeded cap {cap}")
                    index[p] = len(elements)
                    elements.append(p)
                    words.append(words[i] + (j,))
                    queue.append(index[p])
        gen_indices = [index[g] for g in generators]
        return cls(elements, mul, gen_indices, words)

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: T) -> int:
        return self._index[x]

    @property
    def identity_index(self) -> int:
        return 0

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def table(self) -> list[list[int]]:
        """Cayley table on indices; verifies multiplicative closure."""
        n = len(self.elements)
        idx = self._index
        rows = []
        for x in self.elements:
            row = []
            for y in self.elements:
                p = self.mul(x, y)
                if p not in idx:
                    raise ClosureError("element set is not closed under product")
                row.append(idx[p])
            rows.append(row)
        return rows

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        n = len(self.elements)
        inv = [-1] * n
        for i, row in enumerate(self.table):
            for j, p in enumerate(row):
                if p == 0:
                    inv[i] = j
        if -1 in inv:
            raise ClosureError("element without inverse; not a group")
        return tuple(inv)

    def mul_idx(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj_idx(self, x: int, y: int) -> int:
        """x^y := y^-1 x y."""
        t = self.table
        return t[t[self.inverse[y]][x]][y]

    def power_idx(self, i: int, n: int) -> int:
        if n < 0:
            return self.power_idx(self.inverse[i], -n)
        acc = 0
        for _ in range(n):
            acc = self.table[acc][i]
        return acc

    def element_order(self, i: int) -> int:
        t = self.table
        n = 1
        acc = i
        while acc != 0:
            acc = t[acc][i]
            n += 1
        return n

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_order(i) for i in range(len(self))).items()))

    def evaluate_word(self, word: Iterable[int]) -> int:
        acc = 0
        for j in word:
            acc = self.table[acc][self.generator_indices[j]]
        return acc

    # -- conjugacy ------------------------------------------------------

    @cached_property
    def conjugacy(self) -> ConjugacyPartition:
        n = len(self.elements)
        class_of = [-1] * n
        classes = []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            cls_set = {self.conj_idx(i, y) for y in range(n)}
            for j in cls_set:
                class_of[j] = len(classes)
            classes.append(frozenset(cls_set))
        # deterministic ordering: by element order, then size, then first element
        order = sorted(
            range(len(classes)),
            key=lambda c: (self.element_order(min(classes[c])), len(classes[c]), min(classes[c])),
        )
        remap = {old: new for new, old in enumerate(order)}
        classes = tuple(classes[old] for old in order)
        class_of = tuple(remap[c] for c in class_of)
        return ConjugacyPartition(classes, class_of)

    # -- subgroups ------------------------------------------------------

    def subgroup_indices(self, gen_indices: Iterable[int]) -> frozenset[int]:
        """Smallest subgroup containing the given elements, as an index set."""
        t = self.table
        seen = {0}
        gens = list(dict.fromkeys(gen_indices))
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for g in gens:
                p = t[i][g]
                if p not in seen:
                    seen.add(p)
                    queue.append(p)
        return frozenset(seen)

    def subgroup(self, gen_indices: Sequence[int]) -> "FiniteGroup[T]":
        """Materialize a subgroup as its own FiniteGroup, retaining the embedding."""
        sub = FiniteGroup.closure(
            [self.elements[i] for i in gen_indices],
            self.mul,
            self.elements[0],
            cap=len(self) + 1,
        )
        sub.parent_indices = [self._index[x] for x in sub.elements]
        return sub

    def is_subgroup_set(self, indices: frozenset[int]) -> bool:
        t = self.table
        return 0 in indices and all(t[i][j] in indices for i in indices for j in indices)

    def is_maximal(self, sub: frozenset[int]) -> bool:
        """True iff sub is a proper subgroup that every extra element completes."""
        if not self.is_subgroup_set(sub):
            raise ClosureError("not a subgroup of this group")
        n = len(self)
        if len(sub) == n:
            return False
        gens = list(sub)
        for x in range(n):
            if x in sub:
                continue
            if len(self.subgroup_indices(gens + [x])) != n:
                return False
        return True

    # -- conjugation orbits ---------------------------------------------

    def conjugation_orbits(
        self, h_indices: Iterable[int], items: Sequence[frozenset[int]]
    ) -> list[frozenset[int]]:
        """Partition item sets into orbits under conjugation by the given subgroup.

        Items are element-index sets (e.g. {x, -x} pairs); conjugation must map
        each item onto an item, otherwise the action is not well defined.
        """
        item_index = {item: k for k, item in enumerate(items)}
        h = list(h_indices)
        images = []
        for item in items:
            row = []
            for y in h:
                img = frozenset(self.conj_idx(i, y) for i in item)
                if img not in item_index:
                    raise ClosureError("conjugation does not preserve the item set")
                row.append(item_index[img])
            images.append(row)
        seen = [False] * len(items)
        orbits = []
        for k in range(len(items)):
            if seen[k]:
                continue
            orbit = set()
            queue = deque([k])
            seen[k] = True
            while queue:
                m = queue.popleft()
                orbit.add(m)
                for img in images[m]:
                    if not seen[img]:
                        seen[img] = True
                        queue.append(img)
            orbits.append(frozenset(orbit))
        return orbits
