import pytest

from artinhomology.complexes import build_KW, incidence_sign, mask_of, vertices_of
from artinhomology.coxeter import coxeter_graph
from artinhomology.polynomial import Poly, q_bracket

from oracles import matrix_product_is_zero


class TestBuildKW:
    def test_finite_full_power_set(self):
        K = build_KW(coxeter_graph("A", 2))
        assert len(K) == 4
        assert sorted(K.simplices()) == [0, 1, 2, 3]

    def test_affine_boundary(self):
        K = build_KW(coxeter_graph("tD", 4))
        assert len(K) == 31  # everything but the full set
        assert 0b11111 not in K

    def test_obstruction6_shape(self, obstruction6_complex):
        K = obstruction6_complex
        assert [len(level) for level in K.masks_by_card] == [1, 6, 9, 3]
        # exactly three 2-simplices: {1,2,4}, {2,3,5}, {1,3,6} in 1-based labels
        expected = {mask_of([0, 1, 3]), mask_of([1, 2, 4]), mask_of([0, 2, 5])}
        assert set(K.masks_by_card[3]) == expected

    @pytest.mark.parametrize("fam,n", [("A", 4), ("B", 3), ("tD", 4), ("tC", 3)])
    def test_downward_closed(self, fam, n):
        K = build_KW(coxeter_graph(fam, n))
        members = set(K.simplices())
        for m in members:
            for f in vertices_of(m):
                assert m & ~(1 << f) in members


class TestIncidenceSign:
    def test_positions(self):
        sigma = mask_of([0, 1, 2])
        assert incidence_sign(sigma, mask_of([1, 2])) == 1
        assert incidence_sign(sigma, mask_of([0, 2])) == -1
        assert incidence_sign(sigma, mask_of([0, 1])) == 1

    def test_rejects_non_facet(self):
        with pytest.raises(ValueError):
            incidence_sign(mask_of([0, 1, 2]), mask_of([0]))
        with pytest.raises(ValueError):
            incidence_sign(mask_of([0, 1]), mask_of([2]))


class TestBoundaries:
    def test_a1_edge_over_empty(self):
        K = build_KW(coxeter_graph("A", 1))
        assert K.boundary_c0(1) == [[1]]
        assert K.boundary_c(1) == [[Poly((1, 1))]]

    def test_i2_5_column(self):
        K = build_KW(coxeter_graph("I2", 5))
        assert K.boundary_c0(2) == [[-1], [1]]
        mat = K.boundary_c(2)
        assert mat[0][0] == -q_bracket(5)
        assert mat[1][0] == q_bracket(5)

    @pytest.mark.parametrize("fam,n", [("A", 3), ("B", 3), ("I2", 6), ("tD", 4)])
    def test_boundary_squares_to_zero(self, fam, n):
        K = build_KW(coxeter_graph(fam, n))
        for k in range(2, K.top_cardinality + 1):
            assert matrix_product_is_zero(K.boundary_c0(k - 1), K.boundary_c0(k))
            a, b = K.boundary_c(k - 1), K.boundary_c(k)
            for i in range(len(a)):
                for j in range(len(b[0])):
                    acc = Poly.zero()
                    for t in range(len(b)):
                        acc = acc + a[i][t] * b[t][j]
                    assert acc.is_zero()


class TestWeights:
    def test_obstruction6_level(self, obstruction6_complex):
        lev = obstruction6_complex.weighted_level(2)
        by_card = [sorted(lev.of(m) for m in level) for level in obstruction6_complex.masks_by_card]
        assert by_card[0] == [0]
        assert by_card[1] == [1] * 6
        assert by_card[2] == [1, 1, 1, 2, 2, 2, 2, 2, 2]
        assert by_card[3] == [3, 3, 3]

    def test_a4_full_weight(self):
        K = build_KW(coxeter_graph("A", 4))
        assert K.weighted_level(5).of(0b1111) == 1

    def test_td4_trivial_level(self):
        K = build_KW(coxeter_graph("tD", 4))
        lev = K.weighted_level(7)
        assert all(lev.of(m) == 0 for m in K.simplices())
        assert 7 not in K.relevant_degrees()

    @pytest.mark.parametrize("fam,n", [("A", 5), ("D", 5), ("tB", 4), ("tD", 5), ("F", 4)])
    def test_monotone_along_faces(self, fam, n):
        K = build_KW(coxeter_graph(fam, n))
        for d in K.relevant_degrees():
            lev = K.weighted_level(d)
            for sigma, tau in K.covering_pairs():
                assert lev.of(tau) <= lev.of(sigma)


def test_relevant_degrees_examples():
    K = build_KW(coxeter_graph("A", 2))
    assert K.relevant_degrees() == [2, 3]
    K = build_KW(coxeter_graph("I2", 10))
    assert K.relevant_degrees() == [2, 5, 10]
