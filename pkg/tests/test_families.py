import pytest

from deltamod.exact import is_parallel
from deltamod.families import (Partition, build_A, build_A_lee, expected_count,
                               partition_count, partitions, sporadic_rank3)
from deltamod.intmatrix import IntMatrix
from deltamod.modularity import modularity_level
from tests._oracles import naive_partition_count


class TestPartitions:
    def test_small(self):
        assert [p.parts for p in partitions(1)] == [(1,)]
        assert [p.parts for p in partitions(2)] == [(2,), (1, 1)]
        assert len(partitions(4)) == 5

    def test_reverse_lexicographic_order(self):
        for n in range(1, 9):
            ps = [p.parts for p in partitions(n)]
            assert ps[0] == (n,)
            assert ps[-1] == (1,) * n
            assert ps == sorted(ps, reverse=True)

    def test_count_matches_oracle(self):
        for n in range(1, 13):
            assert len(partitions(n)) == naive_partition_count(n)
            assert partition_count(n) == naive_partition_count(n)

    def test_validation(self):
        with pytest.raises(ValueError):
            partitions(0)
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        assert Partition.parse("2,1,1").parts == (2, 1, 1)


class TestExpectedCount:
    def test_examples(self):
        assert expected_count(3, 5) == 15 + 8
        for r in range(1, 8):
            assert expected_count(1, r) == r * (r + 1) // 2
        assert expected_count(2, 3) == 8  # general bound, below the true value 9


class TestBuildA:
    def test_column_count_example(self):
        assert build_A(3, (2,), 4).matrix.cols == 16

    def test_small_layout_single_part(self):
        # delta 3, partition (2), rank 2: units, one difference, k*e_1 + e_2
        fam = build_A(3, (2,), 2)
        assert fam.matrix.columns() == [
            (1, 0), (0, 1), (1, -1), (1, 1), (2, 1)]
        assert fam.matrix.labels == ("A-1", "A-1", "A-2", "A-3", "A-3")

    def test_small_layout_two_parts(self):
        # trailing block third entries are (0, 1, -1, 1) for partition 1+1
        fam = build_A(3, (1, 1), 3)
        cols = fam.matrix.columns()
        assert cols[-4:] == [(1, 1, 0), (1, 0, 1), (1, 1, -1), (1, -1, 1)]
        assert fam.matrix.labels[-4:] == ("A-3", "A-3", "A-4", "A-4")

    def test_block_order_is_i_then_k_then_j(self):
        fam = build_A(4, (2, 1), 5)
        a4 = [c for c, lab in zip(fam.matrix.columns(), fam.matrix.labels)
              if lab == "A-4"]
        # first i=1 (unit row 1), k=1, j sweeping ascending
        assert a4[0] == (1, 1, -1, 0, 0)
        assert a4[1] == (1, 1, 0, -1, 0)
        assert a4[2] == (1, 1, 0, 0, -1)
        assert a4[3] == (2, 1, -1, 0, 0)
        # then i=2 block, single part value 1, j sweep restarts below it
        assert a4[6] == (1, -1, 1, 0, 0)

    def test_designated_element_is_first_unit(self):
        fam = build_A(3, (2,), 4)
        assert fam.designated_element == 0
        assert fam.matrix.column(0) == (1, 0, 0, 0)

    def test_validation(self):
        with pytest.raises(ValueError):
            build_A(3, (1,), 4)  # wrong sum
        with pytest.raises(ValueError):
            build_A(3, (1, 1), 2)  # rank below m + 1
        with pytest.raises(ValueError):
            build_A(1, (1,), 3)

    def test_counts_and_non_parallel_range(self):
        for delta in (2, 3):
            for lam in partitions(delta - 1):
                for r in range(lam.m + 1, 6):
                    fam = build_A(delta, lam, r)
                    assert fam.matrix.cols == expected_count(delta, r)
                    cols = fam.matrix.columns()
                    assert not any(
                        is_parallel(cols[i], cols[j])
                        for i in range(len(cols)) for j in range(i + 1, len(cols)))


class TestBuildLee:
    def test_reduces_to_unimodular_block(self):
        fam = build_A_lee(1, 4)
        assert fam.matrix.cols == 10
        assert all(lab in ("A-1", "A-2") for lab in fam.matrix.labels)

    def test_example_counts(self):
        assert build_A_lee(2, 4).matrix.cols == 13
        assert build_A_lee(3, 4).matrix.cols == 16

    def test_ladder_block(self):
        fam = build_A_lee(3, 3)
        ladder = [c for c, lab in zip(fam.matrix.columns(), fam.matrix.labels)
                  if lab == "A-5"]
        assert ladder == [(2, -1, 0), (3, -1, 0), (2, 0, -1), (3, 0, -1)]

    def test_same_count_as_partition_family(self):
        for delta in (2, 3, 4):
            for r in range(delta, 7):
                a = build_A(delta, (delta - 1,), r)
                lee = build_A_lee(delta, r)
                assert a.matrix.cols == lee.matrix.cols
                assert a.matrix != lee.matrix

    def test_validation(self):
        with pytest.raises(ValueError):
            build_A_lee(0, 3)
        with pytest.raises(ValueError):
            build_A_lee(2, 1)


class TestSporadic:
    def test_exact_entries(self):
        assert sporadic_rank3() == IntMatrix.from_rows([
            [1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1],
            [0, 1, 0, -1, 0, 1, 1, 2, 1, 2, 1],
            [0, 0, 1, 0, -1, -1, -2, -3, -2, -3, -3]])

    def test_beats_family_count(self):
        assert sporadic_rank3().cols == 11 > expected_count(3, 3) == 10

    def test_level_and_parallelism(self):
        report = modularity_level(sporadic_rank3())
        assert report.delta == 3
        assert report.pairwise_non_parallel
