"""Fixture and random posets/lattices with frozen id conventions.

==============  ===============================================
kind            element ids
==============  ===============================================
boolean n       subset bitmask
chain n         position from the bottom
antichain n     arbitrary order
diamond         0 bottom, 1-3 atoms, 4 top
pentagon        0 bottom, 1 a, 2 b, 3 c (b < c), 4 top
divisor m       divisors of m in ascending order
partition n     restricted growth strings in lexicographic order
product         pair (i, j) has id i * |Q| + j
downset         downsets in ascending bitmask order
random_poset    fixed topological order 0..n-1
==============  ===============================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import ParamError, SizeError
from .poset import DEFAULT_MAX_ELEMENTS, FinitePoset, bits, build_poset

DOWNSET_BASE_MAX = 20
RANDOM_POSET_MAX = 20


def _check_int(name, value, lo, hi=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParamError(f"{name} must be an integer, got {value!r}")
    if value < lo or (hi is not None and value > hi):
        bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
        raise ParamError(f"{name} must be in {bound}, got {value}")


def boolean(n: int) -> FinitePoset:
    _check_int("n", n, 1, 10)
    size = 1 << n
    edges = [(s, s | (1 << i)) for s in range(size) for i in range(n) if not s >> i & 1]
    labels = ["{" + ",".join(str(i + 1) for i in range(n) if s >> i & 1) + "}" for s in range(size)]
    return build_poset(size, edges, labels)


def chain(n: int) -> FinitePoset:
    _check_int("n", n, 1, DEFAULT_MAX_ELEMENTS)
    return build_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    _check_int("n", n, 1, DEFAULT_MAX_ELEMENTS)
    return build_poset(n, [])


def diamond() -> FinitePoset:
    """M_3: bottom, three atoms, top."""
    return build_poset(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"]
    )


def pentagon() -> FinitePoset:
    """N_5 with a < top and b < c < top."""
    return build_poset(5, [(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)], ["0", "a", "b", "c", "1"])


def _divisors(m):
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def divisor(m: int) -> FinitePoset:
    """Divisors of ``m`` ordered by divisibility."""
    _check_int("m", m, 1)
    divs = _divisors(m)
    if len(divs) > DEFAULT_MAX_ELEMENTS:
        raise SizeError(f"{m} has {len(divs)} divisors")
    index = {d: i for i, d in enumerate(divs)}
    edges = [
        (index[d], index[e])
        for d in divs
        for e in divs
        if e % d == 0 and _is_prime(e // d)
    ]
    return build_poset(len(divs), edges, [str(d) for d in divs])


def restricted_growth_strings(n):
    """Set partitions of ``range(n)`` as restricted growth strings, lexicographic."""
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for b in range(top + 2):
            grow(prefix + [b], max(top, b))

    grow([0], 0)
    return out


def partition(n: int) -> FinitePoset:
    """Partitions of an n-set ordered by refinement (finest at the bottom)."""
    _check_int("n", n, 1, 6)
    rgs = restricted_growth_strings(n)
    index = {s: i for i, s in enumerate(rgs)}
    edges = []
    for s in rgs:
        nblocks = max(s) + 1
        for b1 in range(nblocks):
            for b2 in range(b1 + 1, nblocks):
                merged = [b1 if b == b2 else b for b in s]
                # renumber to a restricted growth string
                relabel = {}
                canon = tuple(relabel.setdefault(b, len(relabel)) for b in merged)
                edges.append((index[s], index[canon]))
    labels = []
    for s in rgs:
        blocks = {}
        for i, b in enumerate(s):
            blocks.setdefault(b, []).append(str(i + 1))
        labels.append("|".join("".join(blocks[b]) for b in sorted(blocks)))
    return build_poset(len(rgs), edges, labels)


def product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Cartesian product ordered componentwise; ``(i, j)`` gets id ``i * |Q| + j``."""
    size = P.n * Q.n
    if size > DEFAULT_MAX_ELEMENTS:
        raise SizeError(f"product has {size} elements, cap is {DEFAULT_MAX_ELEMENTS}")
    m = Q.n
    edges = [(a * m + j, b * m + j) for a, b in P.covers for j in range(m)]
    edges += [(i * m + a, i * m + b) for i in range(P.n) for a, b in Q.covers]
    labels = [f"({P.label(i)},{Q.label(j)})" for i in range(P.n) for j in range(m)]
    return build_poset(size, edges, labels)


def downset_lattice(Q: FinitePoset, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FinitePoset:
    """Lattice of down-closed subsets of ``Q`` under inclusion."""
    if Q.n > DOWNSET_BASE_MAX:
        raise SizeError(f"base poset has {Q.n} elements, cap is {DOWNSET_BASE_MAX}")
    strict_down = [Q.down[x] & ~(1 << x) for x in range(Q.n)]
    seen = {0}
    queue = [0]
    while queue:
        d = queue.pop()
        for x in range(Q.n):
            if not d >> x & 1 and strict_down[x] & ~d == 0:
                e = d | (1 << x)
                if e not in seen:
                    seen.add(e)
                    if len(seen) > max_elements:
                        raise SizeError(f"more than {max_elements} downsets")
                    queue.append(e)
    ds = sorted(seen)
    index = {d: i for i, d in enumerate(ds)}
    edges = [
        (index[d], index[d | (1 << x)])
        for d in ds
        for x in range(Q.n)
        if not d >> x & 1 and (d | (1 << x)) in index
    ]
    labels = ["{" + ",".join(Q.label(x) for x in bits(d)) + "}" for d in ds]
    return build_poset(len(ds), edges, labels)


def random_poset(n: int, edge_prob: float, seed: Optional[int] = None) -> FinitePoset:
    """Random DAG on the order 0 < 1 < ... < n-1, each forward edge kept with ``edge_prob``."""
    _check_int("n", n, 1, RANDOM_POSET_MAX)
    if not 0 <= edge_prob <= 1:
        raise ParamError(f"edge_prob must be in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob]
    return build_poset(n, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator with integer parameters.

    ``product a b ...`` is the product of chains of those lengths.
    ``random_poset n [percent]`` and ``downset n [percent]`` draw a random
    poset with edge probability ``percent / 100`` (default 50); ``downset``
    returns its downset lattice.
    """

    kind: str
    params: tuple = ()
    seed: Optional[int] = None


_ARITY = {
    "boolean": (1, 1),
    "chain": (1, 1),
    "antichain": (1, 1),
    "diamond": (0, 0),
    "pentagon": (0, 0),
    "divisor": (1, 1),
    "partition": (1, 1),
    "product": (2, None),
    "downset": (1, 2),
    "random_poset": (1, 2),
}

KINDS = tuple(_ARITY)


def _random_base(params, seed):
    n = params[0]
    percent = params[1] if len(params) > 1 else 50
    _check_int("percent", percent, 0, 100)
    return random_poset(n, percent / 100, seed)


def generate(spec: GeneratorSpec) -> FinitePoset:
    kind, params = spec.kind, tuple(spec.params)
    if kind not in _ARITY:
        raise ParamError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")
    lo, hi = _ARITY[kind]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise ParamError(f"{kind} takes {lo}{'' if hi == lo else '+' if hi is None else f'-{hi}'} parameters, got {len(params)}")
    for p in params:
        _check_int(f"{kind} parameter", p, 0)
    if kind == "boolean":
        return boolean(*params)
    if kind == "chain":
        return chain(*params)
    if kind == "antichain":
        return antichain(*params)
    if kind == "diamond":
        return diamond()
    if kind == "pentagon":
        return pentagon()
    if kind == "divisor":
        return divisor(*params)
    if kind == "partition":
        return partition(*params)
    if kind == "product":
        result = chain(params[0])
        for p in params[1:]:
            result = product(result, chain(p))
        return result
    if kind == "random_poset":
        return _random_base(params, spec.seed)
    return downset_lattice(_random_base(params, spec.seed))
