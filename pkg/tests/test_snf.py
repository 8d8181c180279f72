import random

import pytest

from artinhomology.coxeter import coxeter_graph
from artinhomology.families import complex_A, matching_A
from artinhomology.homology import DegreeHomology, HomologyResult, assemble
from artinhomology.polynomial import Poly, cyclotomic
from artinhomology.snf import (
    GuardRefused,
    PipelineFalsified,
    factor_into_cyclotomics,
    homology_direct,
    smith_normal_form,
)

Z = Poly.zero()
ONE = Poly.one()


def random_unimodular_scramble(diag, rng, steps=25):
    """Row/column additions by polynomial multiples keep invariant factors."""
    n = len(diag)
    A = [[diag[i] if i == j else Poly.zero() for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        mult = Poly([rng.randint(-2, 2) for _ in range(rng.randint(1, 3))])
        if rng.random() < 0.5:
            A[i] = [a + mult * b for a, b in zip(A[i], A[j])]
        else:
            for r in range(n):
                A[r][j] = A[r][j] + mult * A[r][i]
    return A


class TestSmithNormalForm:
    def test_identity(self):
        I = [[ONE if i == j else Z for j in range(3)] for i in range(3)]
        assert smith_normal_form(I) == [ONE, ONE, ONE]

    def test_monic_normalization(self):
        f = Poly((-1, 0, 1))  # q^2 - 1 = (q-1)(q+1)
        assert smith_normal_form([[f.scale(-3)]]) == [f]

    def test_scrambled_diagonal(self):
        rng = random.Random(2)
        d1 = Poly((1, 1))
        d2 = d1 * Poly((1, 1, 1))
        for _ in range(10):
            A = random_unimodular_scramble([d1, d2], rng)
            assert smith_normal_form(A) == [d1, (d2).monic()]

    def test_invariance_property(self):
        rng = random.Random(9)
        for _ in range(10):
            diag = [cyclotomic(2), cyclotomic(2) * cyclotomic(3), cyclotomic(2) * cyclotomic(3) * cyclotomic(5)]
            A = random_unimodular_scramble(diag, rng)
            got = smith_normal_form(A)
            assert got == [d.monic() for d in diag]

    def test_divisibility_chain(self):
        rng = random.Random(4)
        A = [[Poly([rng.randint(-2, 2) for _ in range(3)]) for _ in range(4)] for _ in range(3)]
        factors = smith_normal_form(A)
        for a, b in zip(factors, factors[1:]):
            assert a.divides(b)


class TestFactorization:
    def test_plain(self):
        f = cyclotomic(2) * cyclotomic(5)
        assert factor_into_cyclotomics(f, [2, 3, 5]) == {2: 1, 5: 1}

    def test_detects_multiplicity(self):
        f = cyclotomic(2) ** 2 * cyclotomic(3)
        assert factor_into_cyclotomics(f, [2, 3]) == {2: 2, 3: 1}

    def test_non_cyclotomic_rejected(self):
        with pytest.raises(PipelineFalsified):
            factor_into_cyclotomics(Poly((-2, 0, 1)), [2, 3, 4])  # q^2 - 2


class TestHomologyDirect:
    def test_i2_5(self):
        res = homology_direct(coxeter_graph("I2", 5)).result
        assert res == HomologyResult((DegreeHomology(0, ((2, 1),)), DegreeHomology(0, ((5, 1),))))

    def test_h3_column(self):
        res = homology_direct(coxeter_graph("H", 3)).result
        assert res == HomologyResult(
            (
                DegreeHomology(0, ((2, 1),)),
                DegreeHomology(0, ()),
                DegreeHomology(0, ((2, 1), (6, 1), (10, 1))),
            )
        )

    def test_a2_agrees_with_matchings(self):
        K = complex_A(2)
        ms = {d: matching_A(2, 0, 0, d, K)[1] for d in K.relevant_degrees()}
        assert assemble(K, ms) == homology_direct(coxeter_graph("A", 2)).result

    def test_guard(self):
        with pytest.raises(GuardRefused):
            homology_direct(coxeter_graph("E", 6))

    def test_invariant_factors_squarefree_small_types(self):
        # homology_direct raises PipelineFalsified if any factor is not
        for fam, n in (("A", 4), ("B", 3), ("D", 4), ("I2", 8), ("tA", 3), ("tC", 3)):
            homology_direct(coxeter_graph(fam, n))
