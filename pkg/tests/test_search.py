import pytest

from artinhomology.complexes import build_KW
from artinhomology.coxeter import coxeter_graph
from artinhomology.homology import torsion_from_matching
from artinhomology.matching import is_acyclic, is_precise, is_weighted, validate
from artinhomology.search import prove_no_precise, search_precise
from artinhomology.snf import GuardRefused


def assert_fully_verified(K, M, d):
    assert validate(M, K) is None
    lev = K.weighted_level(d)
    assert is_acyclic(M, K)
    assert is_weighted(M, lev)
    assert is_precise(M, K, lev).precise


class TestSearchPrecise:
    def test_e6_d8_contributes_torsion_at_h4(self):
        K = build_KW(coxeter_graph("E", 6))
        res = search_precise(K, 8, order_seed=0)
        assert res.found
        assert_fully_verified(K, res.matching, 8)
        assert torsion_from_matching(res.matching, K, K.weighted_level(8)) == {4: 1}

    def test_tf4_d5_trivial_torsion(self):
        K = build_KW(coxeter_graph("tF", 4))
        res = search_precise(K, 5, order_seed=0)
        assert res.found
        assert torsion_from_matching(res.matching, K, K.weighted_level(5)) == {}

    def test_irrelevant_d_weight_zero_everywhere(self):
        K = build_KW(coxeter_graph("A", 3))
        res = search_precise(K, 11, order_seed=0)
        assert res.found
        assert_fully_verified(K, res.matching, 11)
        # with all weights zero, preciseness forces a vanishing Morse boundary
        assert torsion_from_matching(res.matching, K, K.weighted_level(11)) == {}

    def test_deterministic_per_seed(self):
        K = build_KW(coxeter_graph("F", 4))
        a = search_precise(K, 2, order_seed=42)
        b = search_precise(K, 2, order_seed=42)
        assert a.found and b.found
        assert a.matching == b.matching
        assert a.stats == b.stats

    def test_budget_exhaustion_is_notfound(self, obstruction6_complex):
        res = search_precise(obstruction6_complex, 2, budget=10, order_seed=0)
        assert not res.found
        assert res.stats.nodes >= 10


class TestProveNoPrecise:
    def test_obstruction6_certificate(self, obstruction6_complex):
        out = prove_no_precise(obstruction6_complex, 2)
        assert out.certified_absent
        assert out.candidates_checked == 18

    def test_a2_d3_exists(self):
        K = build_KW(coxeter_graph("A", 2))
        out = prove_no_precise(K, 3)
        assert not out.certified_absent
        assert_fully_verified(K, out.exists, 3)
        # agreement with the searcher
        res = search_precise(K, 3, order_seed=0)
        assert res.found

    def test_a1_d2_exists_empty(self):
        K = build_KW(coxeter_graph("A", 1))
        out = prove_no_precise(K, 2)
        assert not out.certified_absent
        assert len(out.exists) == 0

    def test_cap_refusal(self):
        K = build_KW(coxeter_graph("E", 6))
        with pytest.raises(GuardRefused):
            prove_no_precise(K, 2, pair_cap=20)


class TestSearchVsCertification:
    def test_no_instance_gets_both(self, obstruction6_complex):
        # search must not "find" where nonexistence is certified
        out = prove_no_precise(obstruction6_complex, 2)
        res = search_precise(obstruction6_complex, 2, budget=50_000, order_seed=3)
        assert out.certified_absent and not res.found
