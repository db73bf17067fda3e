from fractions import Fraction
from math import comb

import pytest

from refilt.growth import gk_estimate, graded_dim_compare, growth_csv, hilbert_count
from refilt.presets import quantum_affine
from refilt.refilter import WeightVector


def brute_count(t, w, n):
    """Direct enumeration over a bounding box; independent of the DP."""
    s = len(w)

    def laurent(dim, budget):
        if dim == 0:
            yield 0
            return
        for rest in laurent(dim - 1, budget):
            yield rest
            for e in range(1, budget - rest + 1):
                yield rest + e
                yield rest + e  # +e and -e

    def gens(dim, budget):
        if dim == 0:
            yield 0
            return
        for rest in gens(dim - 1, budget):
            e = 0
            while rest + e * w[dim - 1] <= budget:
                yield rest + e * w[dim - 1]
                e += 1

    total = 0
    for lb in laurent(t, n):
        if lb > n:
            continue
        for gb in gens(s, n - lb):
            if lb + gb <= n:
                total += 1
    return total


class TestHilbertCount:
    def test_quantum_plane_binomials(self, plane):
        for n in range(31):
            assert hilbert_count(plane, (1, 1), n) == (n + 1) * (n + 2) // 2
        assert hilbert_count(plane, (1, 1), 4) == 15

    def test_uq_sl2_level_two(self, uq):
        assert hilbert_count(uq, (1, 1), 2) == 14

    def test_level_zero_single_monomial(self, all_passing):
        for pres in all_passing.values():
            assert hilbert_count(pres, (1,) * pres.s, 0) == 1

    def test_accepts_weight_vector_type(self, plane):
        assert hilbert_count(plane, WeightVector((1, 1)), 4) == 15

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_brute_enumeration(self, uq, n):
        assert hilbert_count(uq, (1, 1), n) == brute_count(1, (1, 1), n)

    def test_nonunit_weights_against_enumeration(self, plane):
        for n in range(8):
            assert hilbert_count(plane, (2, 3), n) == brute_count(0, (2, 3), n)

    def test_rejects_bad_weights(self, plane):
        with pytest.raises(ValueError):
            hilbert_count(plane, (0, 1), 3)
        with pytest.raises(ValueError):
            hilbert_count(plane, (1,), 3)


class TestGkEstimate:
    def test_quantum_affine_spaces(self):
        for s in (1, 2, 3):
            table = gk_estimate(quantum_affine(s), (1,) * s, 40)
            assert not table.is_estimate
            assert table.estimated_degree == Fraction(s)
            for n in range(41):
                assert table.counts[n] == comb(n + s, s)

    def test_quantum_plane_exact_fit(self, plane):
        table = gk_estimate(plane, (1, 1), 30)
        assert table.exact_fit is not None
        assert [table.fit_value(n) for n in range(31)] == list(table.counts)

    def test_uq_sl2_degree_three(self, uq):
        table = gk_estimate(uq, (1, 1), 60)
        assert not table.is_estimate
        assert table.estimated_degree == Fraction(3)
        # closed form: C(n+2,2) + 2*C(n+2,3)
        for n in range(61):
            assert table.counts[n] == comb(n + 2, 2) + 2 * comb(n + 2, 3)

    def test_counts_nondecreasing(self, all_passing):
        for pres in all_passing.values():
            table = gk_estimate(pres, (1,) * pres.s, 12)
            assert table.counts[0] >= 1
            assert all(a <= b for a, b in zip(table.counts, table.counts[1:]))

    def test_quasi_polynomial_falls_back_to_estimate(self, plane):
        table = gk_estimate(plane, (2, 2), 40)
        assert table.is_estimate
        assert table.exact_fit is None
        assert Fraction(1) < table.estimated_degree < Fraction(3)

    def test_nmax_floor(self, plane):
        with pytest.raises(ValueError):
            gk_estimate(plane, (1, 1), 7)


class TestGradedDimCompare:
    def test_all_presets(self, all_passing):
        for pres in all_passing.values():
            assert graded_dim_compare(pres, (1,) * pres.s, 30)

    def test_weyl_vs_plane_counts(self, weyl, plane):
        for n in range(31):
            assert hilbert_count(weyl, (1, 1), n) == hilbert_count(plane, (1, 1), n)

    def test_mismatched_weights_false(self, uq):
        assert not graded_dim_compare(uq, (1, 1), 30, (1, 2))


def test_growth_csv(plane):
    table = gk_estimate(plane, (1, 1), 8)
    text = growth_csv(table)
    lines = text.strip().splitlines()
    assert lines[0] == "n,h"
    assert lines[1] == "0,1"
    assert lines[5] == "4,15"
