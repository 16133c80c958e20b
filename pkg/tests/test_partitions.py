"""Enumeration, Durfee chains, the Rogers-Ramanujan predicate, and marks."""

import pytest

from qspt.partitions import (
    DurfeeChain,
    Partition,
    enumerate_partitions,
    frequency,
    is_rogers_ramanujan,
    marks,
    partition_count,
    successive_durfee,
    successive_lower_durfee,
)
from qspt.series import inv_pochhammer_inf

FIGURE = Partition((9, 8, 8, 8, 8, 6, 6, 5, 4, 4, 3))


class TestPartitionType:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_n_and_len(self):
        p = Partition((3, 2, 2))
        assert p.n == 7
        assert len(p) == 3

    def test_conjugate(self):
        assert Partition((3, 2, 2)).conjugate() == (3, 3, 1)
        assert Partition(()).conjugate() == ()


class TestEnumeration:
    def test_order_of_four(self):
        got = [p.parts for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_empty(self):
        got = list(enumerate_partitions(0))
        assert len(got) == 1 and got[0].parts == ()

    def test_count_nine(self):
        assert sum(1 for _ in enumerate_partitions(9)) == 30

    @pytest.mark.parametrize("n", range(21))
    def test_counts_match_series(self, n):
        gf = inv_pochhammer_inf(1, 20)
        assert sum(1 for _ in enumerate_partitions(n)) == gf.coefficient(n)
        assert partition_count(n) == gf.coefficient(n)

    def test_no_duplicates(self):
        seen = set()
        for p in enumerate_partitions(12):
            assert p.parts not in seen
            assert p.n == 12
            seen.add(p.parts)

    def test_partition_count_sixty(self):
        assert partition_count(60) == 966467


class TestDurfeeChains:
    def test_figure_upper(self):
        assert successive_durfee(FIGURE).sides == (6, 4, 1)

    def test_figure_lower(self):
        assert successive_lower_durfee(FIGURE).sides == (3, 5, 3)

    def test_singleton(self):
        assert successive_durfee(Partition((1,))).sides == (1,)
        assert successive_lower_durfee(Partition((1,))).sides == (1,)

    def test_square(self):
        assert successive_durfee(Partition((2, 2))).sides == (2,)
        assert successive_lower_durfee(Partition((2, 2))).sides == (2,)

    def test_wj_example_lower(self):
        assert successive_lower_durfee(Partition((4, 4, 3, 3, 2))).sides[:2] == (2, 3)

    def test_kinds(self):
        assert successive_durfee(FIGURE).kind == "upper"
        assert successive_lower_durfee(FIGURE).kind == "lower"

    def test_empty_chains(self):
        assert successive_durfee(Partition(())) == DurfeeChain((), "upper")
        assert successive_lower_durfee(Partition(())) == DurfeeChain((), "lower")

    def test_upper_weakly_decreasing(self):
        for n in range(1, 16):
            for p in enumerate_partitions(n):
                s = successive_durfee(p).sides
                assert all(a >= b for a, b in zip(s, s[1:]))

    def test_lower_monotone_except_last(self):
        # d_i <= d_{i+1} may fail only at the final step
        for n in range(1, 26):
            for p in enumerate_partitions(n):
                s = successive_lower_durfee(p).sides
                assert all(a <= b for a, b in zip(s[:-1], s[1:-1]))

    def test_upper_square_sum_bound(self):
        for n in range(1, 16):
            for p in enumerate_partitions(n):
                sides = successive_durfee(p).sides
                total = sum(d * d for d in sides)
                assert total <= n
                if total == n:
                    # a stack of exact squares: parts are the sides repeated
                    expected = tuple(d for d in sides for _ in range(d))
                    assert p.parts == expected


class TestRogersRamanujan:
    def test_spec_example(self):
        assert is_rogers_ramanujan(Partition((2, 2, 1)), 1) is False

    def test_square_is_rr(self):
        assert is_rogers_ramanujan(Partition((3, 3, 3)), 1) is True

    def test_full_chain_vacuous(self):
        p = Partition((4, 4, 3, 3, 2))
        s = len(successive_lower_durfee(p))
        assert is_rogers_ramanujan(p, s) is True

    def test_too_many_squares_rejected(self):
        with pytest.raises(ValueError):
            is_rogers_ramanujan(Partition((1,)), 2)


class TestMarks:
    def test_worked_example(self):
        p = Partition((5, 5, 4, 3, 3, 3))
        assert marks(p) == ((5, 1), (5, 2), (4, 1), (3, 1), (3, 2), (3, 3))

    def test_distinct_parts(self):
        assert marks(Partition((4, 2, 1))) == ((4, 1), (2, 1), (1, 1))

    def test_repeated_ones(self):
        assert marks(Partition((1, 1, 1, 1))) == ((1, 1), (1, 2), (1, 3), (1, 4))


class TestFrequency:
    def test_present(self):
        assert frequency(Partition((3, 3, 2)), 3) == 2

    def test_absent(self):
        assert frequency(Partition((3, 3, 2)), 5) == 0

    def test_conservation(self):
        for p in enumerate_partitions(10):
            values = set(p.parts)
            assert sum(frequency(p, t) * t for t in values) == 10


def _rr_with_full_chain(p):
    # every part consumed by the first s-1 lower squares is at most d_s
    chain = successive_lower_durfee(p)
    if len(chain) <= 1:
        return True
    consumed = sum(chain.sides[:-1])
    return sorted(p.parts)[consumed - 1] <= chain.sides[-1]


class TestChainLemmas:
    def test_lower_equals_reversed_upper_for_rr(self):
        # the lower-Durfee squares of a Rogers-Ramanujan partition form its
        # Durfee squares
        for n in range(1, 26):
            for p in enumerate_partitions(n):
                if not _rr_with_full_chain(p):
                    continue
                lower = successive_lower_durfee(p).sides
                upper = successive_durfee(p).sides
                assert tuple(reversed(lower)) == upper, p

    def test_chain_lengths_always_agree(self):
        for n in range(1, 26):
            for p in enumerate_partitions(n):
                assert len(successive_lower_durfee(p)) == len(successive_durfee(p)), p

    def test_rr_examples(self):
        assert _rr_with_full_chain(Partition((2, 2, 1)))
        assert not _rr_with_full_chain(Partition((2, 2, 2, 1)))
