import pytest

from artinhomology.complexes import build_KW
from artinhomology.coxeter import coxeter_graph
from artinhomology.families import (
    complex_tD,
    matching_A,
    matching_I2,
    matching_tB,
    matching_tD,
)
from artinhomology.homology import (
    DegreeHomology,
    HomologyComputation,
    HomologyResult,
    assemble,
    free_part,
    torsion_from_matching,
)
from artinhomology.matching import Matching, MatchingError

from oracles import dense_rank


class TestTorsionFromMatching:
    def test_i2_paper_rows(self):
        K, M = matching_I2(6, 2)
        assert torsion_from_matching(M, K, K.weighted_level(2)) == {0: 1, 1: 1}
        K, M = matching_I2(5, 3)
        assert torsion_from_matching(M, K, K.weighted_level(3)) == {}

    def test_tb3_single_critical(self):
        K, M = matching_tB(3, 3)
        assert torsion_from_matching(M, K, K.weighted_level(3)) == {}

    def test_rejects_imprecise(self):
        K, _ = matching_I2(6, 3)
        with pytest.raises(MatchingError):
            torsion_from_matching(Matching.empty(), K, K.weighted_level(3))


class TestFreePart:
    def test_finite_trivial(self):
        assert free_part(build_KW(coxeter_graph("E", 7))) == {}

    def test_affine_top_degree(self):
        assert free_part(build_KW(coxeter_graph("tD", 5))) == {5: 1}
        assert free_part(build_KW(coxeter_graph("tI", 1))) == {1: 1}

    def test_obstruction6_matches_dense_elimination(self, obstruction6_complex):
        K = obstruction6_complex
        ranks = {k: dense_rank(K.boundary_c0(k)) for k in range(1, K.top_cardinality + 1)}
        expected = {}
        for m in range(K.top_cardinality + 1):
            r = len(K.masks_by_card[m]) - ranks.get(m, 0) - ranks.get(m + 1, 0)
            if r:
                expected[m] = r
        assert free_part(K) == expected

    def test_restricted_system_refused(self):
        from artinhomology.families import complex_A

        with pytest.raises(ValueError):
            free_part(complex_A(4, 1, 1))


class TestAssemble:
    def test_td4_column(self):
        K = complex_tD(4)
        ms = {d: matching_tD(4, d, K)[1] for d in K.relevant_degrees()}
        res = assemble(K, ms)
        assert res == HomologyResult(
            (
                DegreeHomology(0, ((2, 1),)),
                DegreeHomology(0, ((3, 1),)),
                DegreeHomology(0, ((4, 3),)),
                DegreeHomology(0, ((2, 4), (4, 3), (6, 3))),
                DegreeHomology(1, ()),
            )
        )

    def test_i2_formula(self):
        for m in (5, 6, 12):
            K = build_KW(coxeter_graph("I2", m))
            ms = {d: matching_I2(m, d, K)[1] for d in K.relevant_degrees()}
            res = assemble(K, ms)
            divisors = tuple((d, 1) for d in range(2, m + 1) if m % d == 0)
            assert res.degree(0) == DegreeHomology(0, ((2, 1),))
            assert res.degree(1) == DegreeHomology(0, divisors)

    def test_missing_d_refused(self):
        K = build_KW(coxeter_graph("A", 2))
        ms = {2: matching_A(2, 0, 0, 2, K)[1]}
        with pytest.raises(ValueError):
            assemble(K, ms)

    @pytest.mark.parametrize("fam,n", [("F", 4), ("E", 6)])
    def test_seed_independence(self, fam, n):
        # any verified precise matching gives the same homology
        from artinhomology.search import search_precise

        K = build_KW(coxeter_graph(fam, n))
        results = []
        for seed in (0, 1, 2):
            ms = {}
            for d in K.relevant_degrees():
                r = search_precise(K, d, order_seed=seed)
                assert r.found
                ms[d] = r.matching
            results.append(assemble(K, ms))
        assert results[0] == results[1] == results[2]


class TestJsonSchema:
    def test_round_trip(self):
        K = complex_tD(4)
        ms = {d: matching_tD(4, d, K)[1] for d in K.relevant_degrees()}
        from artinhomology.homology import MatchingProvenance

        comp = HomologyComputation(
            "tD4", 5, assemble(K, ms), tuple(MatchingProvenance(d, "paper", None) for d in ms)
        )
        obj = comp.to_json_obj()
        assert obj["type"] == "tD4" and obj["rank"] == 5
        assert HomologyComputation.from_json_obj(obj) == comp

    def test_render_text(self):
        res = HomologyResult(
            (DegreeHomology(0, ((2, 1),)), DegreeHomology(2, ((4, 3), (6, 1))))
        )
        assert res.render_text() == "H_0 = {2}\nH_1 = {4}^3 (+) {6} (+) R^2"
