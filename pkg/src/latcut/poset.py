"""Finite posets stored as a reduced cover relation plus bitset reachability.

Elements are the integers ``0..n-1``.  ``up[x]`` and ``down[x]`` are Python
ints used as bitsets: bit ``y`` of ``up[x]`` is set iff ``x <= y``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    BoundsError,
    CycleError,
    EmptyError,
    LimitError,
    NotComparableError,
    PosetError,
    RedundantEdgeError,
    SizeError,
)

DEFAULT_MAX_ELEMENTS = 4096
DEFAULT_CHAIN_LIMIT = 10**6

Chain = tuple  # strictly increasing tuple of element ids


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


class FinitePoset:
    """Immutable finite poset on ``range(n)``.

    Build instances with :func:`build_poset`; the constructor trusts its
    arguments.
    """

    __slots__ = ("n", "covers", "labels", "up", "down", "_upper", "_lower", "_cache")

    def __init__(self, n, covers, up, down, labels=None):
        self.n = n
        self.covers = tuple(sorted(covers))
        self.labels = tuple(labels) if labels is not None else None
        self.up = tuple(up)
        self.down = tuple(down)
        upper = [[] for _ in range(n)]
        lower = [[] for _ in range(n)]
        for a, b in self.covers:
            upper[a].append(b)
            lower[b].append(a)
        self._upper = tuple(tuple(u) for u in upper)
        self._lower = tuple(tuple(l) for l in lower)
        # memo for derived data (meet tables, chains, partitions); never
        # changes observable results
        self._cache = {}

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FinitePoset(n={self.n}, covers={list(self.covers)!r})"

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (self.n, self.covers, self.labels) == (other.n, other.covers, other.labels)

    def __hash__(self):
        return hash((self.n, self.covers, self.labels))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def check(self, *elems: int) -> None:
        for e in elems:
            if not isinstance(e, int) or not 0 <= e < self.n:
                raise BoundsError(f"element id {e!r} out of range 0..{self.n - 1}")


def _topological_order(n, succ):
    indeg = [0] * n
    for a in range(n):
        for b in succ[a]:
            indeg[b] += 1
    queue = deque(x for x in range(n) if indeg[x] == 0)
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(order) < n:
        stuck = sorted(x for x in range(n) if indeg[x] > 0)
        return None, stuck
    return order, None


def build_poset(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    labels: Sequence[str] | None = None,
    *,
    strict: bool = False,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FinitePoset:
    """Build a poset from ``n`` and a list of ``(lower, upper)`` pairs.

    The order is the reflexive-transitive closure of ``edges``; redundant
    edges are dropped by transitive reduction, unless ``strict`` is set, in
    which case the first redundant edge raises :class:`RedundantEdgeError`.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise PosetError(f"element count must be an integer, got {n!r}")
    if n <= 0:
        raise EmptyError("posets must have at least one element")
    if n > max_elements:
        raise SizeError(f"{n} elements exceeds the cap of {max_elements}")
    if labels is not None:
        labels = [str(s) for s in labels]
        if len(labels) != n:
            raise PosetError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise PosetError("labels must be pairwise distinct")

    succ = [set() for _ in range(n)]
    pairs = []
    for edge in edges:
        a, b = edge
        for e in (a, b):
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
                raise BoundsError(f"edge {tuple(edge)!r} references id outside 0..{n - 1}")
        if a == b:
            if strict:
                raise RedundantEdgeError(f"self-loop ({a}, {b}) is not a cover", (a, b))
            continue
        pairs.append((a, b))
        succ[a].add(b)

    order, stuck = _topological_order(n, succ)
    if order is None:
        raise CycleError(f"edges contain a cycle through elements {stuck}", stuck)

    up = [0] * n
    for x in reversed(order):
        mask = 1 << x
        for y in succ[x]:
            mask |= up[y]
        up[x] = mask
    down = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            down[y] |= 1 << x

    covers = set()
    for a in range(n):
        for b in succ[a]:
            if not any(c != b and (up[c] >> b) & 1 for c in succ[a]):
                covers.add((a, b))
    if strict:
        seen = set()
        for p in pairs:
            if p not in covers or p in seen:
                raise RedundantEdgeError(f"edge {p} is implied by other edges", p)
            seen.add(p)
    return FinitePoset(n, covers, up, down, labels)


def leq(P: FinitePoset, x: int, y: int) -> bool:
    P.check(x, y)
    return bool((P.up[x] >> y) & 1)


def less(P: FinitePoset, x: int, y: int) -> bool:
    return x != y and leq(P, x, y)


def comparable(P: FinitePoset, x: int, y: int) -> bool:
    return leq(P, x, y) or leq(P, y, x)


def upper_covers(P: FinitePoset, x: int) -> tuple:
    P.check(x)
    return P._upper[x]


def lower_covers(P: FinitePoset, x: int) -> tuple:
    P.check(x)
    return P._lower[x]


def covers(P: FinitePoset, x: int, y: int) -> bool:
    """True iff ``y`` covers ``x``."""
    P.check(x, y)
    return y in P._upper[x]


def minimal_elements(P: FinitePoset) -> tuple:
    return tuple(x for x in range(P.n) if not P._lower[x])


def maximal_elements(P: FinitePoset) -> tuple:
    return tuple(x for x in range(P.n) if not P._upper[x])


def least_element(P: FinitePoset):
    """The least element, or None when there are several minimal elements."""
    mins = minimal_elements(P)
    return mins[0] if len(mins) == 1 else None


def greatest_element(P: FinitePoset):
    maxs = maximal_elements(P)
    return maxs[0] if len(maxs) == 1 else None


def iter_maximal_chains(P: FinitePoset) -> Iterator[Chain]:
    """Yield maximal chains in lexicographic order of their element tuples."""
    upper = P._upper
    for start in minimal_elements(P):
        path = [start]
        stack = [iter(upper[start])]
        while stack:
            if not upper[path[-1]]:
                yield tuple(path)
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
            else:
                path.append(nxt)
                stack.append(iter(upper[nxt]))


def count_maximal_chains(P: FinitePoset) -> int:
    """Number of maximal chains, counted by dynamic programming over covers."""
    key = "chain_count"
    if key not in P._cache:
        ways = [0] * P.n
        for x in reversed(_linear_extension(P)):
            ways[x] = sum(ways[y] for y in P._upper[x]) if P._upper[x] else 1
        P._cache[key] = sum(ways[x] for x in minimal_elements(P))
    return P._cache[key]


def maximal_chains(P: FinitePoset, limit: int = DEFAULT_CHAIN_LIMIT) -> list:
    """All maximal chains, lexicographically ordered.

    Raises :class:`LimitError` if there are more than ``limit`` chains.
    """
    total = count_maximal_chains(P)
    if total > limit:
        raise LimitError(f"{total} maximal chains exceed the limit of {limit}")
    key = "chains"
    if key not in P._cache:
        P._cache[key] = tuple(iter_maximal_chains(P))
    return list(P._cache[key])


def chain_masks(P: FinitePoset, limit: int = DEFAULT_CHAIN_LIMIT) -> tuple:
    """Maximal chains as bitsets, in the same order as :func:`maximal_chains`."""
    chains = maximal_chains(P, limit)
    key = "chain_masks"
    if key not in P._cache:
        P._cache[key] = tuple(to_mask(c) for c in chains)
    return P._cache[key]


def is_maximal_chain(P: FinitePoset, chain: Sequence[int]) -> bool:
    if not chain:
        return False
    P.check(*chain)
    if P._lower[chain[0]] or P._upper[chain[-1]]:
        return False
    return all(b in P._upper[a] for a, b in zip(chain, chain[1:]))


def is_antichain(P: FinitePoset, elems: Iterable[int]) -> bool:
    return antichain_violation(P, elems) is None


def antichain_violation(P: FinitePoset, elems: Iterable[int]):
    """Return a pair ``(x, y)`` with ``x < y`` inside ``elems``, or None."""
    elems = sorted(set(elems))
    P.check(*elems)
    mask = to_mask(elems)
    for x in elems:
        above = P.up[x] & mask & ~(1 << x)
        if above:
            return (x, next(bits(above)))
    return None


def interval(P: FinitePoset, x: int, y: int) -> tuple:
    """Sorted element ids ``z`` with ``x <= z <= y``."""
    if not leq(P, x, y):
        raise NotComparableError(x, y, f"interval [{x}, {y}] is empty: {x} is not below {y}")
    return tuple(bits(P.up[x] & P.down[y]))


def interval_subposet(P: FinitePoset, x: int, y: int):
    """Induced subposet on ``[x, y]`` and the tuple mapping new ids to old ids."""
    ids = interval(P, x, y)
    index = {e: i for i, e in enumerate(ids)}
    edges = [(index[a], index[b]) for a in ids for b in P._upper[a] if b in index]
    labels = [P.labels[e] for e in ids] if P.labels is not None else None
    return build_poset(len(ids), edges, labels), ids


def induced_subposet(P: FinitePoset, elems: Iterable[int]):
    """Induced subposet on an arbitrary subset, with the id mapping."""
    ids = tuple(sorted(set(elems)))
    P.check(*ids)
    index = {e: i for i, e in enumerate(ids)}
    edges = [(index[a], index[b]) for a in ids for b in ids if a != b and (P.up[a] >> b) & 1]
    labels = [P.labels[e] for e in ids] if P.labels is not None else None
    return build_poset(len(ids), edges, labels), ids


def _linear_extension(P: FinitePoset) -> tuple:
    key = "linear_extension"
    if key not in P._cache:
        order, _ = _topological_order(P.n, P._upper)
        P._cache[key] = tuple(order)
    return P._cache[key]


def linear_extension(P: FinitePoset) -> tuple:
    """A topological order of the elements."""
    return _linear_extension(P)
