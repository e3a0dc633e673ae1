"""Antichain cutsets: testing, enumeration, and the level-class theorem.

An antichain cutset meets every maximal chain in exactly one element.  In a
finite semimodular lattice these are precisely the level classes; this
module checks that claim on concrete lattices and builds the certificates
used in both directions of the argument.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    ChainError,
    EmptyError,
    InternalError,
    IsLevelClassError,
    LimitError,
    NotAntichainError,
)
from .lattice import height, join, meet, require_lattice, require_semimodular_lattice
from .levels import level_classes, tilde_neighbors
from .poset import (
    DEFAULT_CHAIN_LIMIT,
    FinitePoset,
    antichain_violation,
    bits,
    chain_masks,
    is_maximal_chain,
    maximal_chains,
    to_mask,
)

DEFAULT_ENUM_CHAIN_LIMIT = 10**4
DEFAULT_NODE_BUDGET = 10**6
BUDGET_ENV = "LATCUT_BUDGET"

LEVEL_NOT_CUTSET = "level_not_cutset"
CUTSET_NOT_LEVEL = "cutset_not_level"


def default_node_budget() -> int:
    """Search-node budget: ``$LATCUT_BUDGET`` if set, else the built-in default."""
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
        return value
    return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class Mismatch:
    elems: tuple
    kind: str
    witness: tuple


@dataclass(frozen=True)
class AnalysisReport:
    """Outcome of comparing level classes with antichain cutsets.

    For ``level_not_cutset`` mismatches the witness is a maximal chain that
    misses the class or meets it twice.  For ``cutset_not_level`` it is a
    pair ``(a, b)`` with ``a`` in the cutset and ``b`` in a different class
    (or, if the cutset sits inside one class, ``b`` in that class but
    outside the cutset).
    """

    holds: bool
    level_classes: list
    cutsets: list
    mismatches: list = field(default_factory=list)

    def to_dict(self):
        return {
            "holds": self.holds,
            "level_classes": [list(c) for c in self.level_classes],
            "cutsets": [list(c) for c in self.cutsets],
            "mismatches": [
                {"set": list(m.elems), "kind": m.kind, "witness": list(m.witness)}
                for m in self.mismatches
            ],
        }


@dataclass(frozen=True)
class ProofConfig:
    a: int
    b: int
    x: int
    y: int
    z: int
    w: int
    path: tuple


@dataclass(frozen=True)
class WitnessChain:
    chain: tuple
    hits: tuple
    config: Optional[ProofConfig] = None

    def to_dict(self):
        out = {"chain": list(self.chain), "hits": list(self.hits)}
        if self.config is not None:
            c = self.config
            out["config"] = {
                "a": c.a, "b": c.b, "x": c.x, "y": c.y, "z": c.z, "w": c.w,
                "path": list(c.path),
            }
        return out


def _as_sorted(P, elems):
    elems = tuple(sorted(set(elems)))
    P.check(*elems)
    return elems


def cutset_violation(P: FinitePoset, elems: Iterable[int], limit: int = DEFAULT_CHAIN_LIMIT):
    """First maximal chain (lexicographically) not meeting ``elems`` exactly once, or None."""
    elems = _as_sorted(P, elems)
    mask = to_mask(elems)
    masks = chain_masks(P, limit)
    for i, cm in enumerate(masks):
        if (cm & mask).bit_count() != 1:
            return maximal_chains(P, limit)[i]
    return None


def is_antichain_cutset(P: FinitePoset, elems: Iterable[int], limit: int = DEFAULT_CHAIN_LIMIT) -> bool:
    return cutset_violation(P, elems, limit) is None


def witness_chain(P: FinitePoset, elems: Iterable[int], limit: int = DEFAULT_CHAIN_LIMIT):
    """A WitnessChain against ``elems`` found by scanning chains, or None if it is a cutset."""
    elems = _as_sorted(P, elems)
    chain = cutset_violation(P, elems, limit)
    if chain is None:
        return None
    return WitnessChain(chain, tuple(e for e in chain if e in elems))


def enumerate_antichain_cutsets(
    P: FinitePoset,
    *,
    chain_limit: int = DEFAULT_ENUM_CHAIN_LIMIT,
    node_budget: Optional[int] = None,
) -> list:
    """All antichain cutsets as sorted tuples, in lexicographic order.

    Backtracks over the maximal chains: the first chain not yet hit picks one
    of its elements that is incomparable to everything chosen so far.  A
    branch is cut as soon as some later unhit chain has no admissible
    element left.  Distinct branches differ on the element chosen for some
    chain, so no set is produced twice.
    """
    if node_budget is None:
        node_budget = default_node_budget()
    masks = chain_masks(P, chain_limit)
    m = len(masks)
    comparable = [P.up[x] | P.down[x] for x in range(P.n)]
    found = []
    nodes = 0
    stack = [(0, 0, 0)]
    while stack:
        i, chosen, blocked = stack.pop()
        while i < m and masks[i] & chosen:
            i += 1
        if i == m:
            found.append(tuple(bits(chosen)))
            continue
        nodes += 1
        if nodes > node_budget:
            raise LimitError(f"cutset search exceeded the budget of {node_budget} nodes")
        children = []
        for e in bits(masks[i] & ~blocked):
            now_chosen = chosen | (1 << e)
            now_blocked = blocked | comparable[e]
            if all(cm & now_chosen or cm & ~now_blocked for cm in masks[i + 1:]):
                children.append((i + 1, now_chosen, now_blocked))
        stack.extend(reversed(children))
    return sorted(found)


def _compare(P, chain_limit, node_budget):
    partition = level_classes(P)
    classes = list(partition.classes)
    cutsets = enumerate_antichain_cutsets(P, chain_limit=chain_limit, node_budget=node_budget)
    class_set, cut_set = set(classes), set(cutsets)
    mismatches = []
    for cls in classes:
        if cls not in cut_set:
            chain = cutset_violation(P, cls)
            if chain is None:
                raise InternalError(f"class {cls} passes the chain scan but was not enumerated")
            mismatches.append(Mismatch(cls, LEVEL_NOT_CUTSET, chain))
    for cut in cutsets:
        if cut not in class_set:
            a = cut[0]
            other = [e for e in cut if not partition.same_class(a, e)]
            if other:
                pair = (a, other[0])
            else:
                pair = (a, min(set(partition.class_containing(a)) - set(cut)))
            mismatches.append(Mismatch(cut, CUTSET_NOT_LEVEL, pair))
    return AnalysisReport(not mismatches, classes, cutsets, mismatches)


def verify_theorem(
    P: FinitePoset,
    *,
    chain_limit: int = DEFAULT_ENUM_CHAIN_LIMIT,
    node_budget: Optional[int] = None,
) -> AnalysisReport:
    """Check that the antichain cutsets of a semimodular lattice are its level classes."""
    require_semimodular_lattice(P)
    return _compare(P, chain_limit, node_budget)


def compare_unchecked(
    P: FinitePoset,
    *,
    chain_limit: int = DEFAULT_ENUM_CHAIN_LIMIT,
    node_budget: Optional[int] = None,
) -> AnalysisReport:
    """Same comparison as :func:`verify_theorem` but only requires a lattice."""
    require_lattice(P)
    return _compare(P, chain_limit, node_budget)


def _require_maximal_chain(P, chain):
    chain = tuple(chain)
    if not is_maximal_chain(P, chain):
        raise ChainError(f"{list(chain)} is not a maximal chain")
    return chain


def level_chain_intersection(P: FinitePoset, chain, a: int) -> int:
    """The element of a maximal chain lying in the level class of ``a``.

    Located by height arithmetic rather than by searching the class: with
    ``y`` the first element of the chain and ``z = a ∧ y``, the answer is
    the chain element ``x`` whose signed height relative to ``y`` is
    ``h(z, y) - h(z, a)``.
    """
    require_semimodular_lattice(P)
    chain = _require_maximal_chain(P, chain)
    P.check(a)
    j = 0
    y = chain[j]
    z = meet(P, a, y)
    target = height(P, z, y) - height(P, z, a)
    # along a maximal chain h(c_k, c_j) = j - k
    k = j - target
    if not 0 <= k < len(chain):
        raise InternalError(f"height target {target} falls outside chain {list(chain)}")
    x = chain[k]
    if not level_classes(P).same_class(x, a):
        raise InternalError(f"chain element {x} is not in the level class of {a}")
    return x


def _nearest_outside(P, a, cls, members):
    """BFS over the sharing-a-lower-cover graph inside ``cls`` from ``a``.

    Returns the path to the nearest element of ``cls`` outside ``members``,
    breaking ties by smallest endpoint id.
    """
    parent = {a: None}
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for v in tilde_neighbors(P, u):
                if v not in parent:
                    if v not in cls:
                        raise InternalError(f"{u} ~ {v} crosses level classes")
                    parent[v] = u
                    nxt.append(v)
        targets = [v for v in nxt if v not in members]
        if targets:
            v = min(targets)
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return tuple(reversed(path))
        frontier = nxt
    return None


def _extend_down(P, z):
    out = []
    while P._lower[z]:
        z = P._lower[z][0]
        out.append(z)
    return out[::-1]


def _extend_up(P, w):
    out = []
    while P._upper[w]:
        w = P._upper[w][0]
        out.append(w)
    return out


def proof_witness_chain(P: FinitePoset, elems: Iterable[int]) -> WitnessChain:
    """A maximal chain avoiding an antichain that is not a level class.

    Follows the constructive argument: walk from ``a`` in ``A`` through its
    level class to the nearest class member ``b`` outside ``A``; at the
    first step ``x -> y`` leaving ``A``, the chain through ``z = x ∧ y``,
    ``y`` and ``w = x ∨ y`` (extended greedily by smallest ids) misses ``A``.
    """
    require_semimodular_lattice(P)
    elems = _as_sorted(P, elems)
    if not elems:
        raise EmptyError("the set must be non-empty")
    pair = antichain_violation(P, elems)
    if pair is not None:
        raise NotAntichainError(pair)
    members = set(elems)
    partition = level_classes(P)
    if partition.class_containing(elems[0]) == elems:
        raise IsLevelClassError(f"{list(elems)} is a level class")

    for a in elems:
        cls = set(partition.class_containing(a))
        if not cls <= members:
            break
    else:
        raise InternalError(f"every class meeting {list(elems)} is contained in it")

    path = _nearest_outside(P, a, cls, members)
    if path is None:
        raise InternalError(f"no path inside the level class of {a} leaves the set")
    if not all(p in cls for p in path):
        raise InternalError(f"path {path} leaves the level class of {a}")
    i = next(k for k in range(len(path) - 1) if path[k + 1] not in members)
    x, y = path[i], path[i + 1]
    z, w = meet(P, x, y), join(P, x, y)
    upper = P._upper
    if not (x in upper[z] and y in upper[z]):
        raise InternalError(f"{z} is not covered by both {x} and {y}")
    if not (w in upper[x] and w in upper[y]):
        raise InternalError(f"{w} does not cover both {x} and {y}; lattice is not semimodular")

    below, above = _extend_down(P, z), _extend_up(P, w)
    for e in below + above:
        if not (P.up[e] >> x) & 1 and not (P.up[x] >> e) & 1:
            raise InternalError(f"chain element {e} outside [{z}, {w}] is incomparable to {x}")
    chain = tuple(below + [z, y, w] + above)
    hits = tuple(e for e in chain if e in members)
    if hits or not is_maximal_chain(P, chain):
        raise InternalError(f"constructed chain {list(chain)} does not certify the set")
    return WitnessChain(chain, hits, ProofConfig(path[0], path[-1], x, y, z, w, path))
