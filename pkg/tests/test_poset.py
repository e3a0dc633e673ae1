import pytest

from latcut import generators as gen
from latcut.errors import BoundsError, CycleError, EmptyError, LimitError, NotComparableError, RedundantEdgeError
from latcut.poset import (
    build_poset,
    count_maximal_chains,
    interval_subposet,
    is_antichain,
    is_maximal_chain,
    leq,
    lower_covers,
    maximal_chains,
    maximal_elements,
    minimal_elements,
    upper_covers,
)

import oracles


def matrix(P):
    return [[leq(P, i, j) for j in range(P.n)] for i in range(P.n)]


class TestBuild:
    def test_b2_already_reduced(self):
        P = build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert P.covers == ((0, 1), (0, 2), (1, 3), (2, 3))

    def test_redundant_edge_reduced(self):
        P = build_poset(3, [(0, 1), (1, 2), (0, 2)])
        assert P.covers == ((0, 1), (1, 2))
        assert leq(P, 0, 2)

    def test_strict_rejects_redundant(self):
        with pytest.raises(RedundantEdgeError):
            build_poset(3, [(0, 1), (1, 2), (0, 2)], strict=True)
        assert build_poset(3, [(0, 1), (1, 2)], strict=True).covers == ((0, 1), (1, 2))

    def test_cycle(self):
        with pytest.raises(CycleError):
            build_poset(2, [(0, 1), (1, 0)])

    def test_long_cycle(self):
        with pytest.raises(CycleError) as info:
            build_poset(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
        assert info.value.cycle == [1, 2, 3]

    def test_bounds_and_empty(self):
        with pytest.raises(BoundsError):
            build_poset(2, [(0, 2)])
        with pytest.raises(EmptyError):
            build_poset(0)

    def test_labels_must_be_distinct(self):
        with pytest.raises(ValueError):
            build_poset(2, [], ["a", "a"])
        with pytest.raises(ValueError):
            build_poset(2, [], ["a"])

    def test_deterministic(self):
        edges = [(2, 3), (0, 1), (1, 3), (0, 2), (0, 3)]
        assert build_poset(4, edges) == build_poset(4, list(reversed(edges)))


def test_leq_b3(b3):
    assert leq(b3, 1, 3)
    assert not leq(b3, 1, 2)
    assert all(leq(b3, x, x) for x in range(8))
    with pytest.raises(BoundsError):
        leq(b3, 0, 8)


def test_covers_queries(b2, n5, chain3):
    assert upper_covers(b2, 0) == (1, 2)
    assert lower_covers(n5, 4) == (1, 3)
    assert upper_covers(chain3, 2) == ()


def test_extremal_elements(b3, anti2, n5):
    assert minimal_elements(b3) == (0,)
    assert maximal_elements(b3) == (7,)
    assert minimal_elements(anti2) == (0, 1)
    assert maximal_elements(n5) == (4,)


class TestMaximalChains:
    def test_fixtures(self, b2, n5, chain3):
        assert maximal_chains(b2) == [(0, 1, 3), (0, 2, 3)]
        assert maximal_chains(n5) == [(0, 1, 4), (0, 2, 3, 4)]
        assert maximal_chains(chain3) == [(0, 1, 2)]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_boolean_count_is_factorial(self, n):
        P = gen.boolean(n)
        assert len(maximal_chains(P)) == oracles.count_chains_boolean(n)
        assert count_maximal_chains(P) == oracles.count_chains_boolean(n)

    @pytest.mark.parametrize("seed", range(25))
    def test_against_subset_oracle(self, seed):
        P = gen.random_poset(1 + seed % 8, 0.4, seed)
        chains = maximal_chains(P)
        assert chains == sorted(chains)
        assert len(set(chains)) == len(chains)
        assert chains == oracles.maximal_chains_by_subsets(matrix(P))
        for c in chains:
            assert is_maximal_chain(P, c)
            assert c[0] in minimal_elements(P) and c[-1] in maximal_elements(P)

    def test_limit(self):
        with pytest.raises(LimitError):
            maximal_chains(gen.boolean(5), limit=100)
        assert len(maximal_chains(gen.boolean(5), limit=120)) == 120


def test_is_antichain(b2):
    assert is_antichain(b2, {1, 2})
    assert not is_antichain(b2, {0, 3})
    assert is_antichain(b2, set())
    with pytest.raises(BoundsError):
        is_antichain(b2, {9})


class TestInterval:
    def test_b3_lower_half_is_b2(self, b3, b2):
        sub, ids = interval_subposet(b3, 0, 3)
        assert ids == (0, 1, 2, 3)
        assert oracles.is_isomorphic(matrix(sub), matrix(b2))

    def test_point_interval(self, n5):
        sub, ids = interval_subposet(n5, 2, 2)
        assert sub.n == 1 and ids == (2,)

    def test_full_interval(self, n5):
        sub, ids = interval_subposet(n5, 0, 4)
        assert ids == tuple(range(5))
        assert sub.covers == n5.covers

    def test_incomparable(self, b3):
        with pytest.raises(NotComparableError):
            interval_subposet(b3, 1, 2)


@pytest.mark.parametrize("seed", range(40))
def test_reduction_matches_drop_each_edge_oracle(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 8)
    # random DAG edges plus redundant ones, shuffled
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
    rng.shuffle(edges)
    P = build_poset(n, edges)
    assert list(P.covers) == oracles.reduction_by_dropping(n, edges)
    le = oracles.closure(n, edges)
    assert matrix(P) == le
    assert list(P.covers) == oracles.cover_pairs(le)
