import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effvec import (
    apply_similarity,
    block_matrix,
    build_digraph,
    consistent_from_vector,
    construct_dominating_vector,
    dominance_compare,
    equal_tail_reduce,
    extend_one,
    extension_interval,
    is_efficient,
    is_strongly_connected,
    strongly_connected_components,
    subvector_efficiency_profile,
    transform_vector,
    validate_reciprocal,
)
from effvec.efficiency import EQUAL, INCOMPARABLE, V_DOMINATES, W_DOMINATES, ComparisonDigraph
from effvec.errors import DimensionMismatch, InvalidWitness, SubvectorNotEfficient
from effvec.fixtures import A6_U, B3, CC, EX21, EX21_W, canonical_form

from conftest import rand_reciprocal, rand_similarity, rand_vector


class TestBuildDigraph:
    def test_all_ones_complete(self):
        G = build_digraph(validate_reciprocal([[1] * 3] * 3), (1, 1, 1))
        assert all(len(G.succ[i]) == 2 for i in range(3))

    def test_reference_strongly_connected(self):
        G = build_digraph(CC, (13, 8, 7, 12))
        assert is_strongly_connected(G)[0]

    def test_three_dim_not_connected(self):
        G = build_digraph(B3, (3, 2, 1))
        assert not is_strongly_connected(G)[0]

    def test_totality(self, rng):
        for _ in range(50):
            A = rand_reciprocal(5, rng)
            G = build_digraph(A, rand_vector(5, rng))
            for i in range(5):
                for j in range(5):
                    if i != j:
                        assert G.has_edge(i, j) or G.has_edge(j, i)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            build_digraph(CC, (1, 2, 3))


class TestScc:
    def test_cycle(self):
        G = ComparisonDigraph(3, (frozenset({1}), frozenset({2}), frozenset({0})))
        assert len(strongly_connected_components(G)) == 1

    def test_single_edge(self):
        G = ComparisonDigraph(2, (frozenset({1}), frozenset()))
        ok, comps, source = is_strongly_connected(G)
        assert not ok and source == (0,)

    def test_boundary_tie_connected(self):
        # (3,2,1,2): ties w_2 = w_4 keep the digraph connected
        assert is_strongly_connected(build_digraph(CC, (3, 2, 1, 2)))[0]


class TestIsEfficient:
    def test_consistent_columns(self):
        A = consistent_from_vector((1, 2, 5))
        for j in range(3):
            assert is_efficient(A, A.column(j)).efficient

    def test_reference_pair(self):
        assert is_efficient(CC, (3, 2, 1, 2)).efficient
        assert not is_efficient(B3, (3, 2, 1)).efficient

    def test_seven_dim(self):
        assert is_efficient(EX21, EX21_W).efficient

    def test_inefficient_verdict_has_certificate(self):
        v = is_efficient(B3, (3, 2, 1))
        assert v.source_set is not None and v.dominator is not None
        assert dominance_compare(B3, (3, 2, 1), v.dominator) == V_DOMINATES

    def test_scale_invariance_exact(self, rng):
        for _ in range(30):
            A = rand_reciprocal(4, rng)
            w = rand_vector(4, rng)
            c = F(7, 3)
            assert (
                is_efficient(A, w).efficient
                == is_efficient(A, tuple(c * x for x in w)).efficient
            )


class TestDominance:
    def test_scalar_multiple_equal(self):
        assert dominance_compare(CC, (3, 2, 1, 2), (6, 4, 2, 4)) == EQUAL

    def test_efficient_never_dominated(self, rng):
        w = (3, 2, 1, 2)
        for _ in range(200):
            v = rand_vector(4, rng)
            assert dominance_compare(CC, w, v) != V_DOMINATES

    def test_symmetry(self, rng):
        for _ in range(50):
            A = rand_reciprocal(4, rng)
            w, v = rand_vector(4, rng), rand_vector(4, rng)
            a, b = dominance_compare(A, w, v), dominance_compare(A, v, w)
            assert {a, b} in (
                {EQUAL},
                {INCOMPARABLE},
                {V_DOMINATES, W_DOMINATES},
                {V_DOMINATES},  # equal-error, non-proportional edge case
            )


class TestDominatingVector:
    def test_certificate(self):
        verdict = is_efficient(B3, (3, 2, 1))
        v = construct_dominating_vector(B3, (3, 2, 1), verdict.source_set)
        assert dominance_compare(B3, (3, 2, 1), v) == V_DOMINATES

    def test_strongly_connected_rejected(self):
        with pytest.raises(InvalidWitness):
            construct_dominating_vector(CC, (3, 2, 1, 2), {0})

    def test_random_certificates(self, rng):
        found = 0
        while found < 50:
            A = rand_reciprocal(4, rng)
            w = rand_vector(4, rng)
            verdict = is_efficient(A, w)
            if verdict.efficient:
                continue
            found += 1
            assert dominance_compare(A, w, verdict.dominator) == V_DOMINATES


class TestExtension:
    def test_constant_block_intervals(self):
        # covered value-exactly in fixtures; here the equivalence itself
        from effvec import ConstantBlockMatrix

        C5 = ConstantBlockMatrix(F(3), 5, 5).matrix()
        w4 = (F(7), F(3), F(2), F(1))
        iv = extension_interval(C5, w4, 4)
        assert (iv.lo, iv.hi) == (F(1, 3), F(7, 3))
        assert extend_one(C5, w4, 4, F(1, 3))
        assert extend_one(C5, w4, 4, F(7, 3))
        assert not extend_one(C5, w4, 4, F(7, 3) + F(1, 1000))
        assert not extend_one(C5, w4, 4, F(1, 3) - F(1, 1000))

    def test_consistent_degenerate(self):
        A = consistent_from_vector((1, 2, 4, 8))
        sub = tuple(A.column(0)[i] for i in range(3))
        iv = extension_interval(A, sub, 3)
        assert iv.lo == iv.hi

    def test_precondition(self):
        with pytest.raises(SubvectorNotEfficient):
            extension_interval(CC, (3, 2, 1), 3)

    def test_interval_matches_digraph(self, rng):
        # endpoints in, ouside out, interior in -- against the full test
        checked = 0
        while checked < 30:
            A = rand_reciprocal(5, rng)
            w = rand_vector(4, rng)
            k = rng.randrange(5)
            if not is_efficient(A.delete(k), w).efficient:
                continue
            checked += 1
            iv = extension_interval(A, w, k)
            for wk, expect in [
                (iv.lo, True),
                (iv.hi, True),
                ((iv.lo + iv.hi) / 2, True),
                (iv.lo * F(99, 100), iv.lo == iv.hi and False or False),
                (iv.hi * F(101, 100), False),
            ]:
                if wk <= 0:
                    continue
                full = list(w)
                full.insert(k, wk)
                assert is_efficient(A, tuple(full)).efficient == (iv.lo <= wk <= iv.hi)


class TestProfile:
    def test_reference_profiles(self):
        prof = subvector_efficiency_profile(EX21, EX21_W)
        assert prof == frozenset({4, 5})

    def test_cardinality_bound(self, rng):
        # every efficient vector with n >= 4 has at least two efficient subvectors
        checked = 0
        while checked < 30:
            A = rand_reciprocal(5, rng)
            w = rand_vector(5, rng)
            if not is_efficient(A, w).efficient:
                continue
            checked += 1
            assert len(subvector_efficiency_profile(A, w)) >= 2


class TestEqualTailReduce:
    def test_reduces_equal_pair(self, rng):
        form = canonical_form(rand_reciprocal(3, rng), 5)
        w = rand_vector(3, rng) + (F(2), F(2))
        A2, w2 = equal_tail_reduce(form, w)
        assert A2.n == 4 and len(w2) == 4

    def test_verdicts_match(self):
        form = canonical_form(B3, 6)
        A = form.matrix()
        A2, w2 = equal_tail_reduce(form, A6_U)  # tail (12, 7, 7)
        assert len(w2) == 5
        assert is_efficient(A, A6_U).efficient == is_efficient(A2, w2).efficient

    def test_distinct_tail_identity(self, rng):
        form = canonical_form(rand_reciprocal(3, rng), 6)
        w = rand_vector(3, rng) + (F(2), F(3), F(5))
        A2, w2 = equal_tail_reduce(form, w)
        assert w2 == w and A2.n == 6


@given(st.integers(0, 2**30))
@settings(max_examples=60, deadline=None)
def test_similarity_invariance(seed):
    r = random.Random(seed)
    n = r.randint(3, 6)
    A = rand_reciprocal(n, r)
    w = rand_vector(n, r)
    M = rand_similarity(n, r)
    assert (
        is_efficient(A, w).efficient
        == is_efficient(apply_similarity(A, M), transform_vector(M, w)).efficient
    )


def test_verdict_json_round_trip():
    import json

    v = is_efficient(B3, (3, 2, 1))
    d = v.to_dict()
    assert d["status"] == "inefficient"
    assert d["source_set"] and d["dominator"]
    json.dumps(d)  # serializable
    v2 = is_efficient(CC, (3, 2, 1, 2))
    d2 = v2.to_dict()
    assert d2["status"] == "efficient" and "source_set" not in d2
    assert sorted(sum(d2["scc_partition"], [])) == [1, 2, 3, 4]
