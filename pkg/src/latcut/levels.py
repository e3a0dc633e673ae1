"""Level classes: the equivalence closure of "sharing a lower cover"."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoLeastElementError, NotComparableError, NotGradedError
from .lattice import (
    height,
    meet,
    require_semimodular_lattice,
    _chain_lengths_from,
    _extremal_chain,
)
from .poset import FinitePoset, leq, least_element


class UnionFind:
    """Disjoint sets over ``range(n)`` with path compression and union by size."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def groups(self):
        """Groups as sorted tuples, ordered by smallest member."""
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(tuple(g) for g in out.values())


@dataclass(frozen=True)
class LevelPartition:
    """Partition of the elements into level classes.

    ``classes`` are sorted tuples listed by smallest member; ``class_of[x]``
    is the index of the class holding ``x``.
    """

    classes: tuple
    class_of: tuple

    def __len__(self):
        return len(self.classes)

    def same_class(self, x, y):
        return self.class_of[x] == self.class_of[y]

    def class_containing(self, x):
        return self.classes[self.class_of[x]]


def tilde_related(P: FinitePoset, x: int, y: int) -> bool:
    """True iff some element is covered by both ``x`` and ``y`` (or x == y)."""
    P.check(x, y)
    if x == y:
        return True
    return not set(P._lower[x]).isdisjoint(P._lower[y])


def tilde_pairs(P: FinitePoset) -> list:
    """Sorted pairs ``(x, y)`` with ``x < y`` (as ids) that share a lower cover; no self-loops."""
    pairs = set()
    for z in range(P.n):
        ups = P._upper[z]
        for i, x in enumerate(ups):
            for y in ups[i + 1:]:
                pairs.add((x, y))
    return sorted(pairs)


def tilde_neighbors(P: FinitePoset, x: int) -> tuple:
    P.check(x)
    out = set()
    for z in P._lower[x]:
        out.update(P._upper[z])
    out.discard(x)
    return tuple(sorted(out))


def level_classes(P: FinitePoset) -> LevelPartition:
    key = "level_classes"
    if key not in P._cache:
        uf = UnionFind(P.n)
        for z in range(P.n):
            ups = P._upper[z]
            for y in ups[1:]:
                uf.union(ups[0], y)
        classes = tuple(uf.groups())
        class_of = [0] * P.n
        for i, cls in enumerate(classes):
            for x in cls:
                class_of[x] = i
        P._cache[key] = LevelPartition(classes, tuple(class_of))
    return P._cache[key]


def levels_by_height(P: FinitePoset) -> list:
    """Height classes ``L_0, L_1, ...`` above the least element.

    Only the intervals ``[0, x]`` need to be graded for these to be defined.
    """
    bottom = least_element(P)
    if bottom is None:
        raise NoLeastElementError("poset has no least element")
    shortest, longest = _chain_lengths_from(P, bottom)
    for x in range(P.n):
        if shortest[x] != longest[x]:
            chains = (_extremal_chain(P, bottom, x, False), _extremal_chain(P, bottom, x, True))
            raise NotGradedError((bottom, x), chains)
    layers = [[] for _ in range(max(shortest.values()) + 1)]
    for x in range(P.n):
        layers[shortest[x]].append(x)
    return [tuple(layer) for layer in layers]


def same_level_via_height(P: FinitePoset, x: int, y: int) -> bool:
    """Whether ``x`` and ``y`` sit at equal height above their meet."""
    P.check(x, y)
    require_semimodular_lattice(P)
    z = meet(P, x, y)
    return height(P, z, x) == height(P, z, y)


def common_lower_bound_height_check(P: FinitePoset, x: int, y: int, z: int) -> bool:
    P.check(x, y, z)
    require_semimodular_lattice(P)
    for t in (x, y):
        if not leq(P, z, t):
            raise NotComparableError(z, t, f"{z} is not a lower bound of {t}")
    return height(P, z, x) == height(P, z, y)
