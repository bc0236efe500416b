"""Enumeration oracle and the rank generating functions."""

import pytest

from overrank.combinat import (
    Overpartition,
    enumerate_overpartitions,
    nbar,
    nbar_class,
    nbar_class_series,
    nbar_series,
    pbar_series,
    rank,
    rank_table,
)
from overrank.errors import CapExceeded
from overrank.series import LaurentSeries, first_mismatch, series_equal


def op(parts, over=()):
    return Overpartition(tuple(parts), frozenset(over))


class TestEnumeration:
    def test_fourteen_overpartitions_of_four(self):
        ops = set(enumerate_overpartitions(4))
        assert len(ops) == 14
        expected = {
            op([4]), op([4], [4]),
            op([3, 1]), op([3, 1], [3]), op([3, 1], [1]), op([3, 1], [3, 1]),
            op([2, 2]), op([2, 2], [2]),
            op([2, 1, 1]), op([2, 1, 1], [2]), op([2, 1, 1], [1]), op([2, 1, 1], [2, 1]),
            op([1, 1, 1, 1]), op([1, 1, 1, 1], [1]),
        }
        assert ops == expected

    def test_eight_overpartitions_of_three(self):
        ops = set(enumerate_overpartitions(3))
        expected = {
            op([3]), op([3], [3]),
            op([2, 1]), op([2, 1], [2]), op([2, 1], [1]), op([2, 1], [2, 1]),
            op([1, 1, 1]), op([1, 1, 1], [1]),
        }
        assert ops == expected

    def test_empty(self):
        assert list(enumerate_overpartitions(0)) == [op([])]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_overpartitions(41))

    def test_validation(self):
        with pytest.raises(ValueError):
            op([1, 2])
        with pytest.raises(ValueError):
            op([2, 1], [3])


class TestRank:
    def test_examples(self):
        assert rank(op([2, 2])) == 0
        assert rank(op([4], [4])) == 3
        assert rank(op([1, 1, 1, 1])) == -3
        assert rank(op([])) == 0

    def test_table_counts(self):
        assert sorted(r for o in enumerate_overpartitions(3) for r in [rank(o)]) == \
            [-2, -2, 0, 0, 0, 0, 2, 2]
        assert nbar_class(0, 3, 3) == 4
        assert nbar_class(1, 3, 3) == 2
        assert nbar_class(1, 2, 2) == 4

    def test_classes_partition_the_set(self):
        assert sum(nbar_class(s, 5, 7) for s in range(5)) == rank_table(7).total()

    def test_symmetry(self):
        for n in range(0, 31):
            counts = rank_table(n).counts
            for m in range(0, 9):
                assert counts.get(m, 0) == counts.get(-m, 0), (n, m)

    def test_class_symmetry(self):
        for m in (3, 5):
            for n in range(0, 31):
                for s in range(1, m):
                    assert nbar_class(s, m, n) == nbar_class(m - s, m, n), (s, m, n)


class TestSeries:
    def test_pbar(self):
        pb = pbar_series(14)
        assert pb.coeff(0) == 1
        assert pb.coeff(4) == 14
        assert [pb.coeff(n) for n in range(13)] == \
            [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504]

    def test_pbar_vs_enumeration(self):
        pb = pbar_series(21)
        for n in range(21):
            assert pb.coeff(n) == rank_table(n).total(), n

    def test_nbar_series_low_coeffs(self):
        s = nbar_series(0, 6)
        assert [s.coeff(n) for n in range(5)] == [0, 2, 0, 4, 2]
        assert nbar_series(1, 5).coeff(2) == 2

    def test_nbar_series_sign_symmetry(self):
        assert series_equal(nbar_series(3, 25), nbar_series(-3, 25))

    def test_nbar_series_vs_enumeration(self):
        for m in range(-8, 9):
            s = nbar_series(m, 31)
            for n in range(1, 31):
                assert s.coeff(n) == nbar(m, n), (m, n)

    def test_class_series_low_coeffs(self):
        s = nbar_class_series(0, 3, 6)
        assert [s.coeff(n) for n in (1, 2, 3)] == [2, 0, 4]

    def test_class_series_residue_symmetry(self):
        assert series_equal(nbar_class_series(1, 5, 40), nbar_class_series(4, 5, 40))

    def test_class_series_vs_enumeration(self):
        for m in (3, 5):
            for s in range(m):
                series = nbar_class_series(s, m, 31)
                for n in range(1, 31):
                    assert series.coeff(n) == nbar_class(s, m, n), (s, m, n)

    def test_class_sum_completeness(self):
        for m in (3, 5):
            total = LaurentSeries.one(31)
            for s in range(m):
                total = total + nbar_class_series(s, m, 31)
            assert first_mismatch(total, pbar_series(31)) is None
