"""Meets, joins, the lower covering condition, gradedness and heights."""

from __future__ import annotations

from .errors import NotComparableError, NotGradedError, NotLatticeError, NotSemimodularError
from .poset import FinitePoset, bits, leq, linear_extension

MEET_TABLE_MAX = 512


def _maximal_in(P, mask):
    return [c for c in bits(mask) if P.up[c] & mask == 1 << c]


def _minimal_in(P, mask):
    return [c for c in bits(mask) if P.down[c] & mask == 1 << c]


def _bound(P, x, y, op):
    table = P._cache.get(op + "_table")
    if table is not None:
        value = table[x][y]
        if value >= 0:
            return value
    if op == "meet":
        candidates = _maximal_in(P, P.down[x] & P.down[y])
    else:
        candidates = _minimal_in(P, P.up[x] & P.up[y])
    if len(candidates) != 1:
        raise NotLatticeError((x, y), candidates, op)
    return candidates[0]


def meet(P: FinitePoset, x: int, y: int) -> int:
    """Greatest common lower bound of ``x`` and ``y``.

    Raises NotLatticeError (with the maximal lower bounds attached) when it
    does not exist.
    """
    P.check(x, y)
    return _bound(P, x, y, "meet")


def join(P: FinitePoset, x: int, y: int) -> int:
    """Least common upper bound of ``x`` and ``y``."""
    P.check(x, y)
    return _bound(P, x, y, "join")


def lattice_violation(P: FinitePoset):
    """First pair (in id order) lacking a meet or join, as a NotLatticeError; else None."""
    key = "lattice_violation"
    if key in P._cache:
        return P._cache[key]
    n = P.n
    found = None
    meets = [[-1] * n for _ in range(n)]
    joins = [[-1] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            try:
                m = _bound(P, x, y, "meet")
                j = _bound(P, x, y, "join")
            except NotLatticeError as exc:
                found = exc
                break
            meets[x][y] = meets[y][x] = m
            joins[x][y] = joins[y][x] = j
        if found is not None:
            break
    if found is None and n <= MEET_TABLE_MAX:
        P._cache["meet_table"] = meets
        P._cache["join_table"] = joins
    P._cache[key] = found
    return found


def is_lattice(P: FinitePoset) -> bool:
    return lattice_violation(P) is None


def require_lattice(P: FinitePoset) -> None:
    exc = lattice_violation(P)
    if exc is not None:
        raise NotLatticeError(exc.pair, exc.bounds, exc.op)


def semimodularity_violation(P: FinitePoset):
    """Return ``(x, y)`` where x covers x∧y but x∨y does not cover y, or None.

    Pairs are scanned in lexicographic order, so the witness is the first
    violating pair.
    """
    require_lattice(P)
    key = "semimodularity_violation"
    if key not in P._cache:
        found = None
        upper = P._upper
        for x in range(P.n):
            for y in range(P.n):
                if x in upper[meet(P, x, y)] and join(P, x, y) not in upper[y]:
                    found = (x, y)
                    break
            if found:
                break
        P._cache[key] = found
    return P._cache[key]


def is_semimodular(P: FinitePoset) -> bool:
    return semimodularity_violation(P) is None


def require_semimodular_lattice(P: FinitePoset) -> None:
    witness = semimodularity_violation(P)
    if witness is not None:
        raise NotSemimodularError(witness)


def _chain_lengths_from(P, x):
    """Shortest and longest cover-path lengths from ``x`` to each ``y >= x``."""
    key = ("lengths_from", x)
    if key not in P._cache:
        shortest = {x: 0}
        longest = {x: 0}
        above = P.up[x]
        for c in linear_extension(P):
            if c == x or not (above >> c) & 1:
                continue
            preds = [p for p in P._lower[c] if p in shortest]
            shortest[c] = 1 + min(shortest[p] for p in preds)
            longest[c] = 1 + max(longest[p] for p in preds)
        P._cache[key] = (shortest, longest)
    return P._cache[key]


def _extremal_chain(P, x, y, want_longest):
    """Lexicographically smallest shortest (or longest) maximal chain of [x, y]."""
    inside = P.up[x] & P.down[y]
    # distances to y inside the interval
    dist = {y: 0}
    for c in reversed(linear_extension(P)):
        if c == y or not (inside >> c) & 1:
            continue
        succ = [d for d in P._upper[c] if d in dist]
        if succ:
            pick = max if want_longest else min
            dist[c] = 1 + pick(dist[d] for d in succ)
    chain = [x]
    while chain[-1] != y:
        cur = chain[-1]
        chain.append(min(d for d in P._upper[cur] if d in dist and dist[d] == dist[cur] - 1))
    return tuple(chain)


def jordan_dedekind_violation(P: FinitePoset):
    """Return ``(x, y, short_chain, long_chain)`` for the first ungraded interval, or None."""
    key = "jd_violation"
    if key not in P._cache:
        found = None
        for x in range(P.n):
            shortest, longest = _chain_lengths_from(P, x)
            bad = sorted(y for y in shortest if shortest[y] != longest[y])
            if bad:
                y = bad[0]
                found = (x, y, _extremal_chain(P, x, y, False), _extremal_chain(P, x, y, True))
                break
        P._cache[key] = found
    return P._cache[key]


def is_jordan_dedekind(P: FinitePoset) -> bool:
    return jordan_dedekind_violation(P) is None


def height(P: FinitePoset, x: int, y: int) -> int:
    """Height of ``y`` above ``x``: cover steps on any maximal chain of [x, y]."""
    if not leq(P, x, y):
        raise NotComparableError(x, y, f"height needs {x} <= {y}")
    shortest, longest = _chain_lengths_from(P, x)
    if shortest[y] != longest[y]:
        chains = (_extremal_chain(P, x, y, False), _extremal_chain(P, x, y, True))
        raise NotGradedError((x, y), chains)
    return shortest[y]


def signed_height(P: FinitePoset, x: int, y: int) -> int:
    """``height(x, y)`` if x <= y, else ``-height(y, x)``."""
    if leq(P, x, y):
        return height(P, x, y)
    if leq(P, y, x):
        return -height(P, y, x)
    raise NotComparableError(x, y)


def height_table(P: FinitePoset) -> dict:
    """Heights of all comparable pairs; requires every interval to be graded."""
    violation = jordan_dedekind_violation(P)
    if violation is not None:
        raise NotGradedError(violation[:2], violation[2:])
    table = {}
    for x in range(P.n):
        shortest, _ = _chain_lengths_from(P, x)
        for y, h in shortest.items():
            table[x, y] = h
    return table
