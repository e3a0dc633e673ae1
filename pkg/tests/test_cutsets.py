import random

import pytest

from latcut import generators as gen
from latcut.cutsets import (
    CUTSET_NOT_LEVEL,
    LEVEL_NOT_CUTSET,
    compare_unchecked,
    cutset_violation,
    enumerate_antichain_cutsets,
    is_antichain_cutset,
    level_chain_intersection,
    proof_witness_chain,
    verify_theorem,
    witness_chain,
)
from latcut.errors import (
    ChainError,
    EmptyError,
    IsLevelClassError,
    LimitError,
    NotAntichainError,
    NotLatticeError,
    NotSemimodularError,
)
from latcut.lattice import join, meet
from latcut.levels import level_classes
from latcut.poset import build_poset, is_maximal_chain, leq, maximal_chains

import oracles


def matrix(P):
    return [[leq(P, i, j) for j in range(P.n)] for i in range(P.n)]


class TestIsCutset:
    def test_fixtures(self, b2, n5):
        assert is_antichain_cutset(b2, {1, 2})
        assert not is_antichain_cutset(n5, {3})
        assert cutset_violation(n5, {3}) == (0, 1, 4)
        assert is_antichain_cutset(b2, {0})

    def test_hitting_twice(self, b2):
        assert cutset_violation(b2, {0, 1, 2}) == (0, 1, 3)
        w = witness_chain(b2, {0, 1, 2})
        assert w.hits == (0, 1)
        assert witness_chain(b2, {1, 2}) is None

    def test_empty_set(self, b2):
        assert not is_antichain_cutset(b2, set())


class TestEnumerate:
    def test_b3(self, b3):
        assert enumerate_antichain_cutsets(b3) == [(0,), (1, 2, 4), (3, 5, 6), (7,)]

    def test_n5(self, n5):
        assert enumerate_antichain_cutsets(n5) == [(0,), (1, 2), (1, 3), (4,)]

    def test_chain(self, chain3):
        assert enumerate_antichain_cutsets(chain3) == [(0,), (1,), (2,)]

    def test_antichain_poset(self):
        assert enumerate_antichain_cutsets(gen.antichain(3)) == [(0, 1, 2)]

    def test_node_budget(self):
        with pytest.raises(LimitError):
            enumerate_antichain_cutsets(gen.boolean(4), node_budget=3)

    def test_env_budget(self, monkeypatch):
        monkeypatch.setenv("LATCUT_BUDGET", "3")
        with pytest.raises(LimitError):
            enumerate_antichain_cutsets(gen.boolean(4))
        # explicit argument wins over the environment
        assert len(enumerate_antichain_cutsets(gen.boolean(4), node_budget=10**5)) == 5

    def test_chain_limit(self):
        with pytest.raises(LimitError):
            enumerate_antichain_cutsets(gen.boolean(5), chain_limit=100)

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_subset_oracle(self, seed):
        P = gen.random_poset(1 + seed % 9, random.Random(seed).random(), seed)
        assert enumerate_antichain_cutsets(P) == oracles.cutsets_by_subsets(matrix(P))


class TestVerify:
    def test_b4(self):
        report = verify_theorem(gen.boolean(4))
        assert report.holds and len(report.level_classes) == 5
        assert report.mismatches == []

    def test_m3(self, m3):
        report = verify_theorem(m3)
        assert report.holds
        assert report.level_classes == [(0,), (1, 2, 3), (4,)]

    def test_partition_4(self):
        L = gen.partition(4)
        report = verify_theorem(L)
        assert report.holds
        assert sorted(len(c) for c in report.level_classes) == sorted(
            oracles.stirling2(4, k) for k in range(1, 5)
        )

    def test_requires_semimodular(self, n5):
        with pytest.raises(NotSemimodularError) as info:
            verify_theorem(n5)
        assert info.value.witness == (1, 2)

    def test_unchecked_pentagon(self, n5):
        report = compare_unchecked(n5)
        assert not report.holds
        assert report.level_classes == [(0,), (1, 2), (3,), (4,)]
        assert report.cutsets == [(0,), (1, 2), (1, 3), (4,)]
        kinds = {(m.elems, m.kind): m.witness for m in report.mismatches}
        assert kinds == {((3,), LEVEL_NOT_CUTSET): (0, 1, 4), ((1, 3), CUTSET_NOT_LEVEL): (1, 3)}
        assert report.to_dict()["holds"] is False

    def test_unchecked_b2(self, b2):
        assert compare_unchecked(b2).holds

    def test_unchecked_needs_lattice(self):
        P = build_poset(4, [(0, 1), (1, 3), (2, 3)])  # pentagon-like without a bottom
        with pytest.raises(NotLatticeError):
            compare_unchecked(P)


class TestLevelChainIntersection:
    def test_b3(self, b3):
        assert level_chain_intersection(b3, [0, 1, 3, 7], 4) == 1
        assert level_chain_intersection(b3, [0, 1, 3, 7], 7) == 7

    def test_divisor_12(self, div12):
        assert level_chain_intersection(div12, [0, 1, 3, 5], 4) == 3

    def test_bad_input(self, b3, n5):
        with pytest.raises(ChainError):
            level_chain_intersection(b3, [0, 3, 7], 1)
        with pytest.raises(NotSemimodularError):
            level_chain_intersection(n5, [0, 1, 4], 2)

    @pytest.mark.parametrize("seed", range(20))
    def test_every_chain_and_element(self, seed):
        L = gen.downset_lattice(gen.random_poset(1 + seed % 5, 0.3, seed))
        part = level_classes(L)
        for c in maximal_chains(L):
            for a in range(L.n):
                x = level_chain_intersection(L, c, a)
                assert x in c and part.same_class(x, a)


class TestProofWitness:
    def test_b3(self, b3):
        w = proof_witness_chain(b3, {1, 6})
        assert w.chain == (0, 2, 3, 7)
        c = w.config
        assert (c.a, c.b, c.x, c.y, c.z, c.w) == (1, 2, 1, 2, 0, 3)
        assert w.hits == ()
        assert not is_antichain_cutset(b3, {1, 6})

    def test_b2(self, b2):
        w = proof_witness_chain(b2, {1})
        assert w.chain == (0, 2, 3)
        assert (w.config.b, w.config.z, w.config.w) == (2, 0, 3)

    def test_errors(self, b3, n5):
        with pytest.raises(IsLevelClassError):
            proof_witness_chain(b3, {1, 2, 4})
        with pytest.raises(NotAntichainError):
            proof_witness_chain(b3, {1, 3})
        with pytest.raises(EmptyError):
            proof_witness_chain(b3, set())
        with pytest.raises(NotSemimodularError):
            proof_witness_chain(n5, {3})

    @pytest.mark.parametrize("name", ["boolean(4)", "divisor(360)", "partition(4)", "product(chain(3),chain(4))"])
    def test_all_small_antichains(self, name):
        import corpus
        from itertools import combinations

        from latcut.poset import is_antichain

        L = corpus.fixed_semimodular()[name]
        classes = set(level_classes(L).classes)
        for r in (1, 2, 3):
            for s in combinations(range(L.n), r):
                if s in classes or not is_antichain(L, s):
                    continue
                w = proof_witness_chain(L, s)
                assert is_maximal_chain(L, w.chain)
                assert not set(w.chain) & set(s)
                c = w.config
                assert meet(L, c.x, c.y) == c.z and join(L, c.x, c.y) == c.w
                assert {c.z, c.y, c.w} <= set(w.chain)
                assert c.a in s and c.b not in s and c.path[0] == c.a and c.path[-1] == c.b
