import pytest

from artinhomology.complexes import mask_of, vertices_of
from artinhomology.families import (
    complex_A,
    complex_D,
    complex_I2,
    complex_tD,
    critical_descriptor,
    expected_descriptor_A,
    expected_descriptor_D_odd,
    expected_descriptor_tD_odd,
    expected_value_D_even,
    matching_A,
    matching_D,
    matching_I2,
    matching_tB,
    matching_tD,
    product_matching,
)
from artinhomology.matching import is_acyclic, is_precise, is_weighted, validate
from artinhomology.search import prove_no_precise


def run_pipeline(K, M, d, require_precise=True):
    assert validate(M, K) is None
    lev = K.weighted_level(d)
    assert is_acyclic(M, K)
    assert is_weighted(M, lev)
    if require_precise:
        rep = is_precise(M, K, lev)
        assert rep.precise, rep.witness
    return lev


class TestMatchingA:
    def test_worked_example_7_1_3(self):
        # the worked d=3 example: three pairs plus two criticals of weights 2, 1
        K, M = matching_A(7, 1, 3, 3)
        pairs = {(vertices_of(a), vertices_of(b)) for a, b in M.pairs}
        assert pairs == {
            ((0, 1, 2, 3, 4, 5, 6), (0, 1, 3, 4, 5, 6)),
            ((0, 1, 2, 4, 5, 6), (0, 1, 4, 5, 6)),
            ((0, 2, 4, 5, 6), (0, 4, 5, 6)),
        }
        crit = sorted(m for level in M.criticals(K) for m in level)
        assert [vertices_of(m) for m in crit] == [(0, 3, 4, 5, 6), (0, 2, 3, 4, 5, 6)]
        lev = K.weighted_level(3)
        assert sorted(lev.of(m) for m in crit) == [1, 2]

    def test_zero_f_g_critical_counts(self):
        for n in range(1, 13):
            for d in range(2, n + 3):
                K = complex_A(n)
                _, M = matching_A(n, 0, 0, d, K)
                count = sum(len(level) for level in M.criticals(K))
                want = 2 if n % d in (0, d - 1) else 0
                assert count == want, (n, d)

    def test_f_minus_one_mod_d(self):
        # f = -1 mod d makes both table intervals empty: at most one critical
        for d in (2, 3, 4, 5):
            for n in range(1, 11):
                f = d - 1
                for g in range(0, n + 2):
                    K = complex_A(n, f, g)
                    if not len(K):
                        continue
                    _, M = matching_A(n, f, g, d, K)
                    assert sum(len(level) for level in M.criticals(K)) <= 1

    def test_matched_vertex_residues(self):
        # every matched pair toggles a vertex = 0 or f+1 mod d (1-based labels)
        for n in range(1, 10):
            for f in range(0, n + 2):
                for g in range(0, n + 2):
                    K = complex_A(n, f, g)
                    for d in (2, 3, 5):
                        _, M = matching_A(n, f, g, d, K)
                        for a, b in M.pairs:
                            v = vertices_of(a ^ b)[0] + 1
                            assert v % d in (0, (f + 1) % d), (n, f, g, d, v)

    def test_sweep_small(self):
        for n in range(0, 8):
            for f in range(0, n + 2):
                for g in range(0, n + 2):
                    K = complex_A(n, f, g)
                    if not len(K):
                        continue
                    for d in K.relevant_degrees() or [2]:
                        _, M = matching_A(n, f, g, d, K)
                        lev = run_pipeline(K, M, d)
                        assert critical_descriptor(K, M, lev) == expected_descriptor_A(n, f, g, d)

    def test_interval_rewrite_equivalence(self):
        # the two table intervals vs their congruence rewrites, pure arithmetic
        def interval_residues(a, b, d):
            return {x % d for x in range(a, b + 1)} if a <= b else set()

        for d in range(2, 21):
            for f0 in range(d):
                for g0 in range(d):
                    one = interval_residues(max(d - 1, f0 + g0 + 1), min(f0 + d - 1, g0 + d - 1), d)
                    two = interval_residues(max(f0, g0), min(f0 + g0, d - 2), d)
                    for n in range(4 * d, 5 * d):
                        g = g0
                        in_one = n % d in interval_residues(-1, f0 - 1, d) and (n - g) % d in interval_residues(f0 + 1, d - 1, d)
                        in_two = n % d in interval_residues(f0, d - 2, d) and (n - g) % d in interval_residues(0, f0, d)
                        assert (n % d in one) == in_one, (d, f0, g0, n)
                        assert (n % d in two) == in_two, (d, f0, g0, n)
                    assert not (one & two)  # the intervals are always disjoint


class TestMatchingD:
    def test_odd_table_rows(self):
        assert expected_descriptor_D_odd(9, 3) == (2, (3, 3))
        assert expected_descriptor_D_odd(10, 3) == (2, (3, 3))
        assert expected_descriptor_D_odd(8, 3) == (0, ())
        K = complex_D(9)
        _, M = matching_D(9, 0, 3, K)
        lev = run_pipeline(K, M, 3)
        assert critical_descriptor(K, M, lev) == (2, (3, 3))

    def test_even_table_rows(self):
        # n = d/2 + 1 mod d row, e.g. D6 at d=10
        K = complex_D(6)
        _, M = matching_D(6, 0, 10, K)
        lev = run_pipeline(K, M, 10)
        count, values = critical_descriptor(K, M, lev)
        assert count > 0 and all(v == expected_value_D_even(6, 10) == 5 for v in values)

    def test_odd_no_criticals(self):
        K = complex_D(7)
        _, M = matching_D(7, 0, 4 + 1, K)  # d=5, 7 % 5 = 2
        assert sum(len(level) for level in M.criticals(K)) == 0

    def test_g_rejected_for_odd_d(self):
        with pytest.raises(ValueError):
            matching_D(5, 1, 3)

    def test_g_positive_acyclic_weighted(self):
        for n in (4, 5, 6, 7):
            K0 = complex_D(n)
            for d in (2, 4, 6):
                for g in range(1, n):
                    K = complex_D(n, g)
                    _, M = matching_D(n, g, d, K)
                    run_pipeline(K, M, d, require_precise=False)

    def test_no_precise_matching_exists_on_K_D_4_2_at_d2(self):
        # the reason "admissible g" is pinned to 0 for the preciseness sweep
        K = complex_D(4, 2)
        out = prove_no_precise(K, 2)
        assert out.certified_absent
        assert out.candidates_checked == 1  # no weight-equal pairs at all


class TestMatchingTB:
    def test_odd_single_critical(self):
        K, M = matching_tB(3, 3)
        crit = [m for level in M.criticals(K) for m in level]
        assert len(crit) == 1
        lev = K.weighted_level(3)
        assert crit[0].bit_count() - lev.of(crit[0]) == 3 - 1

    def test_even_common_value(self):
        K, M = matching_tB(4, 2)
        lev = run_pipeline(K, M, 2)
        _, values = critical_descriptor(K, M, lev)
        assert values and all(v == 0 for v in values)  # n - n/(d/2) = 0

    def test_even_c1_criticals(self):
        # when the type-(c) route is taken, {0,2,...,n} and {1,2,...,n} are critical
        for n, d in ((4, 4), (6, 4), (6, 6)):
            K, M = matching_tB(n, d)
            crit = {m for level in M.criticals(K) for m in level}
            assert mask_of(range(1, n + 1)) in crit, (n, d)
            assert mask_of([0] + list(range(2, n + 1))) in crit, (n, d)


class TestMatchingTD:
    def test_odd_descriptor_rows(self):
        assert expected_descriptor_tD_odd(9, 3) == (3, (3, 3, 6))
        assert expected_descriptor_tD_odd(8, 3) == (1, (6,))
        K = complex_tD(8)
        _, M = matching_tD(8, 3, K)
        lev = run_pipeline(K, M, 3)
        assert critical_descriptor(K, M, lev) == (1, (6,))

    def test_n4_d4_special_rule(self):
        K, M = matching_tD(4, 4)
        _, down = M.partner_maps()
        for m in K.simplices():
            s = set(vertices_of(m))
            matched = any(m in pair for pair in M.pairs)
            rule = (2 not in s) or not (s & {1, 3, 4})
            assert matched == rule, s

    def test_incidence_cancellation_at_n_equals_d(self):
        # the two alternating paths to the larger recursion critical cancel
        K, M = matching_tD(5, 5)
        from artinhomology.matching import morse_incidence

        md = morse_incidence(M, K)
        sigma, tau1 = mask_of([1, 2, 3, 4, 5]), mask_of([0, 2, 3, 4])
        j = md.critical[5].index(sigma)
        i = md.critical[4].index(tau1)
        assert md.delta[5][i][j] == 0


class TestProducts:
    def test_empty_factors(self):
        K1 = complex_A(1)
        from artinhomology.matching import Matching

        K, M = product_matching(K1, Matching.empty(), K1, Matching.empty())
        assert len(M) == 0
        assert sum(len(level) for level in M.criticals(K)) == len(K) == 4

    def test_a1_squared_d2(self):
        K1 = complex_A(1)
        M1 = matching_A(1, 0, 0, 2, K1)[1]
        K, M = product_matching(K1, M1, K1, M1)
        lev = run_pipeline(K, M, 2)
        assert sum(len(level) for level in M.criticals(K)) == 4

    def test_a2_squared_d3(self):
        K2 = complex_A(2)
        M2 = matching_A(2, 0, 0, 3, K2)[1]
        K, M = product_matching(K2, M2, K2, M2)
        run_pipeline(K, M, 3)
        assert sum(len(level) for level in M.criticals(K)) == 4

    def test_criticals_are_products(self):
        KA = complex_A(3)
        KI = complex_I2(6)
        for d in (2, 3, 4, 6):
            MA = matching_A(3, 0, 0, d, KA)[1]
            MI = matching_I2(6, d, KI)[1]
            K, M = product_matching(KA, MA, KI, MI)
            run_pipeline(K, M, d)
            critA = {m for level in MA.criticals(KA) for m in level}
            critI = {m for level in MI.criticals(KI) for m in level}
            crit = {m for level in M.criticals(K) for m in level}
            assert crit == {a | (b << 3) for a in critA for b in critI}
