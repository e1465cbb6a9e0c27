"""Finite groups as dense index tables.

Elements are the integers 0..order-1 with the identity pinned at index 0;
every downstream structure (cosets, classes, characters) is keyed by these
indices, which makes all outputs bit-reproducible. Construction validates
the full group axioms: Latin square, identity, inverses, and associativity
(exhaustive up to order 200, sampled above).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ClosureCapExceeded,
    IndexOutOfRange,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
)

ASSOC_EXHAUSTIVE_LIMIT = 200
ASSOC_SAMPLE_TRIPLES = 200_000
DEFAULT_CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    mult[a, b] is the index of a*b, inv[a] the index of a^-1, and the
    identity is always element 0. labels are display-only names.
    """

    order: int
    mult: np.ndarray
    inv: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def label(self, g: int) -> str:
        if self.labels is not None:
            return self.labels[g]
        return str(g)

    def check_index(self, g: int) -> int:
        if not 0 <= g < self.order:
            raise IndexOutOfRange(f"element index {g} outside 0..{self.order - 1}")
        return int(g)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices of its parent."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        mem = set(self.members)
        if 0 not in mem:
            raise IndexOutOfRange("subgroup must contain the identity (index 0)")
        if list(self.members) != sorted(mem):
            raise IndexOutOfRange("subgroup members must be sorted and distinct")
        mult, inv = self.parent.mult, self.parent.inv
        for a in self.members:
            self.parent.check_index(a)
            if int(inv[a]) not in mem:
                raise IndexOutOfRange(f"subgroup not closed under inverse at {a}")
            for b in self.members:
                if int(mult[a, b]) not in mem:
                    raise IndexOutOfRange(f"subgroup not closed under product at ({a},{b})")
        if self.parent.order % len(self.members) != 0:
            raise IndexOutOfRange("subgroup order does not divide group order")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes of a group, ordered by minimal representative.

    Class 0 is always {identity}. centralizer_order is per element;
    inverse_class maps a class to the class holding its inverses.
    """

    group: FiniteGroup
    classes: tuple[tuple[int, ...], ...]
    class_of: np.ndarray
    centralizer_order: np.ndarray
    representatives: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes], dtype=np.int64)

    def check_class_index(self, i: int) -> int:
        if not 0 <= i < self.num_classes:
            raise IndexOutOfRange(f"class index {i} outside 0..{self.num_classes - 1}")
        return int(i)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    want = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), want):
            raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if not np.array_equal(np.sort(table[:, j]), want):
            raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    want = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], want) and np.array_equal(table[:, e], want):
            return e
    raise NoIdentity("no element acts as a two-sided identity")


def _derive_inverses(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for g in range(n):
        h = int(np.nonzero(table[g] == 0)[0][0])
        if table[h, g] != 0:
            raise NoInverse(f"element {g}: right inverse {h} is not a left inverse")
        inv[g] = h
    return inv


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= ASSOC_EXHAUSTIVE_LIMIT:
        for a in range(n):
            lhs = table[table[a], :]  # (a*b)*c
            rhs = table[a, table]  # a*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise NotAssociative(f"first violating triple (a,b,c)=({a},{b},{c})")
        return
    rng = np.random.default_rng(0)
    trips = rng.integers(0, n, size=(ASSOC_SAMPLE_TRIPLES, 3))
    a, b, c = trips[:, 0], trips[:, 1], trips[:, 2]
    bad = table[table[a, b], c] != table[a, table[b, c]]
    if bad.any():
        i = int(np.nonzero(bad)[0][0])
        raise NotAssociative(
            f"first violating triple (a,b,c)=({int(a[i])},{int(b[i])},{int(c[i])})"
        )


def _finalize(table: np.ndarray, labels: Optional[Sequence[str]]) -> FiniteGroup:
    """Validate a raw table, relabel the identity to index 0, build the group."""
    n = table.shape[0]
    _check_latin(table)
    e = _find_identity(table)
    if e != 0:
        old_order = [e] + [x for x in range(n) if x != e]
        new_index = np.empty(n, dtype=np.int64)
        new_index[old_order] = np.arange(n)
        table = new_index[table[np.ix_(old_order, old_order)]]
        if labels is not None:
            labels = [labels[x] for x in old_order]
    inv = _derive_inverses(table)
    _check_associative(table)
    return FiniteGroup(
        order=n,
        mult=_freeze(np.ascontiguousarray(table, dtype=np.int64)),
        inv=_freeze(inv),
        labels=tuple(labels) if labels is not None else None,
    )


def build_from_cayley(
    table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None
) -> FiniteGroup:
    """Build and fully validate a group from a raw multiplication table."""
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotLatinSquare(f"table must be square and nonempty, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise NotLatinSquare(f"entry at {tuple(map(int, bad))} outside 0..{n - 1}")
    if labels is not None and len(labels) != n:
        raise NotLatinSquare(f"got {len(labels)} labels for {n} elements")
    return _finalize(arr, labels)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # "p then q": (p*q)(i) = q(p(i))
    return tuple(q[p[i]] for i in range(len(p)))


def cycle_notation(p: Sequence[int]) -> str:
    """Display form of a permutation, e.g. "(0 1 2)(3 4)"; identity is "e"."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


def build_from_permutations(
    generators: Sequence[Sequence[int]], closure_cap: int = DEFAULT_CLOSURE_CAP
) -> FiniteGroup:
    """Generate a group from permutations by breadth-first closure.

    Elements are indexed in deterministic BFS order from the identity,
    applying generators in input order; index 0 is the identity.
    """
    if not generators:
        raise NotAPermutation("generator set must be nonempty")
    degree = len(generators[0])
    gens: list[tuple[int, ...]] = []
    for k, g in enumerate(generators):
        p = tuple(int(x) for x in g)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise NotAPermutation(f"generator {k} is not a permutation of 0..{degree - 1}")
        gens.append(p)

    ident = tuple(range(degree))
    elements: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(elements) >= closure_cap:
                    raise ClosureCapExceeded(f"closure exceeded cap of {closure_cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)

    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(elements):
        for b, pb in enumerate(elements):
            table[a, b] = index[_compose(pa, pb)]
    labels = [cycle_notation(p) for p in elements]
    return _finalize(table, labels)


def conjugacy_classes(group: FiniteGroup) -> ClassData:
    """Partition the group into conjugacy classes by exhaustive conjugation."""
    n = group.order
    mult, inv = group.mult, group.inv
    all_h = np.arange(n)
    class_of = np.full(n, -1, dtype=np.int64)
    classes: list[tuple[int, ...]] = []
    reps: list[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        orbit = np.unique(mult[mult[all_h, g], inv[all_h]])  # {h g h^-1}
        class_of[orbit] = len(classes)
        classes.append(tuple(int(x) for x in orbit))
        reps.append(g)  # ascending scan makes g the minimal member

    centralizer = np.empty(n, dtype=np.int64)
    for g in range(n):
        centralizer[g] = int(np.sum(mult[:, g] == mult[g, :]))

    inverse_class = tuple(int(class_of[inv[r]]) for r in reps)
    return ClassData(
        group=group,
        classes=tuple(classes),
        class_of=_freeze(class_of),
        centralizer_order=_freeze(centralizer),
        representatives=tuple(reps),
        inverse_class=inverse_class,
    )


def subgroup_closure(group: FiniteGroup, generators: Sequence[int]) -> Subgroup:
    """Smallest subgroup containing the given element indices."""
    for g in generators:
        group.check_index(g)
    members = {0}
    queue = deque([0])
    gens = [int(g) for g in generators]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(group.mult[x, g])
            if y not in members:
                members.add(y)
                queue.append(y)
    # right-multiplication closure from the identity already contains all
    # inverses (finite order), so members is the full subgroup
    return Subgroup(parent=group, members=tuple(sorted(members)))


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(parent=group, members=(0,))


def full_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(parent=group, members=tuple(range(group.order)))
