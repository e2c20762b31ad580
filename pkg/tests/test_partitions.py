from math import factorial

import pytest
from hypothesis import given

from conftest import partitions
from osctab.errors import ValidationError
from osctab.partitions import (
    EMPTY,
    Partition,
    cells,
    down_neighbors,
    hook_product,
    make_partition,
    partitions_of,
    partitions_up_to,
    syt_count,
    up_neighbors,
)


def brute_syt(shape):
    """Count fillings with 1..n increasing along rows and columns, one number at a time."""
    rows = len(shape)
    filled = [0] * rows

    def place(m):
        if m == 0:
            return 1
        total = 0
        for r in range(rows):
            c = filled[r]  # next free column in row r
            if c < shape[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                total += place(m - 1)
                filled[r] -= 1
        return total

    return place(sum(shape))


def test_make_partition_examples():
    assert make_partition([]) == EMPTY and make_partition([]).size == 0
    lam = make_partition([4, 2, 2, 1])
    assert lam == (4, 2, 2, 1) and lam.size == 9
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([2, 1]) == make_partition([2, 1])


@pytest.mark.parametrize("bad", [[2, 3], [1, 0, 1], [2, -1], [0, 1], [1.5]])
def test_make_partition_rejects(bad):
    with pytest.raises(ValidationError):
        make_partition(bad)


def test_cells_examples():
    assert cells(EMPTY) == []
    c = cells(Partition([2, 1]))
    assert sorted(x.hook for x in c) == [1, 1, 3]
    assert sorted(x.content for x in c) == [-1, 0, 1]
    big = cells(Partition([4, 2, 2, 1]))
    assert [x.hook for x in big] == [7, 5, 2, 1, 4, 2, 3, 1, 1]
    assert hook_product(Partition([4, 2, 2, 1])) == 1680
    assert (big[0].row, big[0].col) == (1, 1)


def test_syt_count_examples():
    assert syt_count(EMPTY) == 1
    assert syt_count(Partition([1])) == 1
    assert syt_count(Partition([2, 1])) == 2
    assert syt_count(Partition([4, 2, 2, 1])) == 216 == brute_syt((4, 2, 2, 1))


@pytest.mark.parametrize("lam", list(partitions_up_to(8)), ids=str)
def test_syt_count_matches_fillings(lam):
    assert syt_count(lam) == brute_syt(lam)


def test_neighbor_examples():
    lam = Partition([5, 2, 2, 1])
    assert set(up_neighbors(lam)) == {(6, 2, 2, 1), (5, 3, 2, 1), (5, 2, 2, 2), (5, 2, 2, 1, 1)}
    assert set(down_neighbors(lam)) == {(4, 2, 2, 1), (5, 2, 1, 1), (5, 2, 2)}
    assert up_neighbors(EMPTY) == ((1,),)
    assert down_neighbors(EMPTY) == ()
    assert set(up_neighbors(Partition([1]))) == {(2,), (1, 1)}
    assert down_neighbors(Partition([2, 2])) == ((2, 1),)


def test_neighbors_sorted():
    lam = Partition([3, 1])
    assert list(up_neighbors(lam)) == sorted(up_neighbors(lam))
    assert list(down_neighbors(lam)) == sorted(down_neighbors(lam))


@given(partitions())
def test_up_count_is_distinct_parts_plus_one(lam):
    assert len(up_neighbors(lam)) == len(set(lam)) + 1


@given(partitions())
def test_neighbors_are_valid_and_inverse(lam):
    for mu in up_neighbors(lam):
        assert make_partition(list(mu)) == mu and sum(mu) == sum(lam) + 1
        assert lam in down_neighbors(mu)
    for mu in down_neighbors(lam):
        assert make_partition(list(mu)) == mu and sum(mu) == sum(lam) - 1
        assert lam in up_neighbors(mu)


@given(partitions())
def test_branching_sums(lam):
    k = sum(lam)
    assert sum(syt_count(mu) for mu in up_neighbors(lam)) == (k + 1) * syt_count(lam)
    if k:
        assert sum(syt_count(mu) for mu in down_neighbors(lam)) == syt_count(lam)


@given(partitions())
def test_hook_is_arm_plus_leg_plus_one(lam):
    conj = lam.conjugate()
    for c in cells(lam):
        assert c.hook == (lam[c.row - 1] - c.col) + (conj[c.col - 1] - c.row) + 1 >= 1
        assert c.content == c.col - c.row


@pytest.mark.parametrize("r", range(9))
def test_sum_of_squares(r):
    assert sum(syt_count(lam) ** 2 for lam in partitions_of(r)) == factorial(r)


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
