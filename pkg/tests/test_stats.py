"""Rank/crank/j-rank statistics, count tables, moments, and the g_k basis."""

import pytest

from qspt.partitions import Partition, enumerate_partitions, partition_count, successive_durfee
from qspt.stats import (
    MomentTable,
    count_njm,
    crank,
    g_poly,
    gf_njm,
    gf_sym_mu,
    jrank,
    moment,
    moment_via_sym,
    rank,
    stirling_star,
    sym_mu,
)


def combinatorial_counts(j, n):
    """Count partitions of n by j-rank (j=1 means crank, j=2 rank)."""
    out = {}
    for p in enumerate_partitions(n):
        if j == 1:
            m = crank(p)
        elif j == 2:
            m = rank(p)
        else:
            m = jrank(p, j)
            if m is None:
                continue
        out[m] = out.get(m, 0) + 1
    return out


class TestPointStatistics:
    def test_rank_examples(self):
        assert rank(Partition((4, 1))) == 2
        assert rank(Partition((7,))) == 6
        assert rank(Partition((1,) * 7)) == -6

    def test_rank_histogram(self):
        assert combinatorial_counts(2, 3) == {2: 1, 0: 1, -2: 1}

    def test_rank_empty(self):
        with pytest.raises(ValueError):
            rank(Partition(()))

    def test_crank_examples(self):
        assert crank(Partition((3, 1, 1))) == -1
        assert crank(Partition((4, 2))) == 4
        assert crank(Partition((1,))) == -1

    def test_jrank_equals_rank(self):
        for n in range(1, 16):
            for p in enumerate_partitions(n):
                assert jrank(p, 2) == rank(p)

    def test_jrank_small(self):
        assert jrank(Partition((1, 1)), 3) == 0

    def test_jrank_undefined(self):
        assert jrank(Partition((3,)), 3) is None

    def test_jrank_rejects_one(self):
        with pytest.raises(ValueError):
            jrank(Partition((1,)), 1)


class TestCountTables:
    def test_rank_zero_at_three(self):
        assert gf_njm(2, 0, 5).coefficient(3) == 1

    def test_crank_anomaly(self):
        assert gf_njm(1, 0, 3).coefficient(1) == -1
        assert gf_njm(1, 1, 3).coefficient(1) == 1

    def test_jrank_three(self):
        assert gf_njm(3, 0, 4).coefficient(2) == 1

    @pytest.mark.parametrize("j", [2, 3, 4])
    def test_combinatorial_agreement(self, j):
        for n in range(1, 15):
            counts = combinatorial_counts(j, n)
            for m in range(-n, n + 1):
                assert count_njm(j, m, n) == counts.get(m, 0), (j, m, n)

    def test_crank_agreement_beyond_one(self):
        for n in range(2, 15):
            counts = combinatorial_counts(1, n)
            for m in range(-n, n + 1):
                assert count_njm(1, m, n) == counts.get(m, 0), (m, n)

    def test_support(self):
        assert count_njm(2, 7, 3) == 0
        assert count_njm(2, 0, -1) == 0

    def test_symmetry(self):
        for j in (1, 2, 3):
            for n in range(1, 12):
                for m in range(n + 1):
                    assert count_njm(j, m, n) == count_njm(j, -m, n)

    def test_total_is_partition_count(self):
        # for j >= 2, only partitions with >= j-1 Durfee squares are counted
        for j in (2, 3):
            for n in range(1, 12):
                total = sum(count_njm(j, m, n) for m in range(-n, n + 1))
                eligible = sum(
                    1
                    for p in enumerate_partitions(n)
                    if len(successive_durfee(p)) >= j - 1
                )
                assert total == eligible


class TestMoments:
    def test_rank_second_moment(self):
        assert moment(2, 2, 3) == 8

    def test_crank_second_is_np(self):
        for n in range(2, 31):
            assert moment(1, 2, n) == 2 * n * partition_count(n)

    def test_odd_moments_vanish(self):
        for j in (1, 2, 3):
            for n in range(1, 10):
                assert moment(j, 1, n) == 0
                assert moment(j, 3, n) == 0

    def test_zeroth_moment(self):
        assert moment(2, 0, 4) == partition_count(4)

    def test_first_moment_by_table(self):
        for j in (1, 2, 3):
            for n in range(1, 15):
                assert sum(m * count_njm(j, m, n) for m in range(-n, n + 1)) == 0


class TestSymmetrizedMoments:
    def test_crank_mu2_at_one(self):
        assert sym_mu(1, 2, 1) == 1

    def test_rank_eta2_at_one(self):
        assert sym_mu(2, 2, 1) == 0

    def test_direct_sum_oracle(self):
        from qspt.laurent import integer_binomial

        for j in (1, 2):
            for k in (2, 3, 4):
                shift = (k - 1) // 2
                for n in range(1, 12):
                    direct = sum(
                        integer_binomial(m + shift, k) * count_njm(j, m, n)
                        for m in range(-n, n + 1)
                    )
                    assert sym_mu(j, k, n) == direct

    @pytest.mark.parametrize("j", [1, 2, 3])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_closed_form_gf(self, j, k):
        gf = gf_sym_mu(j, k, 16)
        for n in range(17):
            assert gf.coefficient(n) == sym_mu(j, 2 * k, n), (j, k, n)


class TestGBasis:
    def test_g1(self):
        assert g_poly(1) == (0, 0, 1)

    def test_g2(self):
        assert g_poly(2) == (0, 0, -1, 0, 1)

    def test_g3(self):
        assert g_poly(3) == (0, 0, 4, 0, -5, 0, 1)

    def test_stirling_star_rows(self):
        table = stirling_star(3)
        assert table.value(1, 1) == 1
        assert (table.value(2, 1), table.value(2, 2)) == (1, 1)
        assert (table.value(3, 1), table.value(3, 2), table.value(3, 3)) == (1, 5, 1)

    def test_stirling_star_positivity(self):
        table = stirling_star(6)
        for n in range(1, 7):
            assert table.value(n, n) == 1
            assert table.value(n, 1) == 1
            for k in range(1, n + 1):
                assert table.value(n, k) > 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            stirling_star(3).value(4, 1)


class TestMomentViaSym:
    def test_k1_is_second_moment(self):
        for j in (1, 2):
            for n in range(1, 31):
                assert moment_via_sym(j, 1, n) == moment(j, 2, n)

    def test_fourth_crank_moment(self):
        n = 5
        direct = sum(m**4 * count_njm(1, m, n) for m in range(-n, n + 1))
        assert moment_via_sym(1, 2, n) == direct

    @pytest.mark.parametrize("j", [1, 2, 3])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_agreement(self, j, k):
        for n in range(1, 31):
            assert moment_via_sym(j, k, n) == moment(j, 2 * k, n)


class TestMomentTable:
    def test_build_count(self):
        mt = MomentTable.build("count", 2, 0, 6)
        assert mt.values == tuple(count_njm(2, 0, n) for n in range(7))
        assert mt.source == "generating-function"

    def test_build_symmetrized(self):
        mt = MomentTable.build("symmetrized", 1, 2, 5)
        assert mt.values[1] == 1

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            MomentTable.build("other", 1, 0, 3)
