import pytest

from partition_lab.enumeration import (
    PartitionStream,
    Restriction,
    count_restricted,
    partitions_of,
    partitions_of_dimension,
    self_conjugate_of_dimension,
)
from partition_lab.errors import TooLargeForExhaustion
from partition_lab.partition import EMPTY, from_parts, is_self_conjugate_oracle
from partition_lab.series import p_exact

SEVEN = [
    (7,), (6, 1), (5, 2), (5, 1, 1), (4, 3), (4, 2, 1), (4, 1, 1, 1), (3, 3, 1), (3, 2, 2),
    (3, 2, 1, 1), (3, 1, 1, 1, 1), (2, 2, 2, 1), (2, 2, 1, 1, 1), (2, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1),
]  # fmt: skip


def parts_list(stream):
    return [p.parts for p in stream]


def test_partitions_of_seven_in_listed_order():
    assert parts_list(partitions_of(7)) == SEVEN


def test_partitions_of_zero_and_six():
    assert parts_list(partitions_of(0)) == [()]
    assert partitions_of(6).count() == 11
    assert partitions_of(1).count() == 1


@pytest.mark.parametrize("n", range(0, 26))
def test_strictly_decreasing_lex_and_counts(n):
    items = parts_list(partitions_of(n))
    assert all(a > b for a, b in zip(items, items[1:]))
    assert len(set(items)) == len(items)
    assert all(sum(x) == n for x in items)
    assert len(items) == p_exact(n)


@pytest.mark.parametrize(
    "d, expected",
    [
        (1, [(1,)]),
        (2, [(2, 2), (2, 1)]),
        (3, [(3, 3, 3), (3, 3, 2), (3, 3, 1), (3, 2, 2), (3, 2, 1), (3, 1, 1)]),
    ],
)
def test_partitions_of_dimension(d, expected):
    assert parts_list(partitions_of_dimension(d)) == expected


def test_dimension_stream_covers_filtered_exhaustion():
    for d in range(1, 6):
        brute = sorted(
            (p.parts for n in range(2 * d - 1, d * d + 1) for p in partitions_of(n)
             if p.first == p.length == d),
            reverse=True,
        )
        assert parts_list(partitions_of_dimension(d)) == brute


@pytest.mark.parametrize("d", range(1, 9))
def test_self_conjugate_counts(d):
    assert self_conjugate_of_dimension(d).count() == 2 ** (d - 1)


def test_count_recurrence():
    x = {d: self_conjugate_of_dimension(d).count() for d in range(1, 9)}
    for d in range(3, 9):
        assert x[d] == 2 + sum(x[j] for j in range(2, d))


@pytest.mark.parametrize("d", range(2, 8))
def test_full_square_and_one_removed(d):
    sizes = [p.size for p in self_conjugate_of_dimension(d)]
    assert sizes.count(d * d) == 1
    assert sizes.count(d * d - 1) == 1


def test_self_conjugate_stream_is_oracle_filtered():
    for p in self_conjugate_of_dimension(5):
        assert is_self_conjugate_oracle(p)


@pytest.mark.parametrize(
    "n, restriction, expected",
    [
        (7, Restriction.ODD_PARTS, 5),
        (7, Restriction.DISTINCT_PARTS, 5),
        (6, Restriction.DISTINCT_PARTS, 4),
        (6, Restriction.ODD_PARTS, 4),
        (7, Restriction.NONE, 15),
        (0, Restriction.DISTINCT_PARTS, 1),
    ],
)
def test_count_restricted(n, restriction, expected):
    assert count_restricted(n, restriction) == expected


def test_odd_equals_distinct_by_exhaustion():
    for n in range(41):
        assert count_restricted(n, Restriction.ODD_PARTS) == count_restricted(
            n, Restriction.DISTINCT_PARTS
        )


def test_exhaustion_guard():
    with pytest.raises(TooLargeForExhaustion):
        count_restricted(61)


def test_resume_from_cursor():
    stream = partitions_of(7)
    head = [next(stream) for _ in range(5)]
    assert stream.cursor == head[-1]
    rest = parts_list(PartitionStream(size=7, resume_after=stream.cursor))
    assert [p.parts for p in head] + rest == SEVEN


def test_resume_dimension():
    stream = partitions_of_dimension(4)
    first = [next(stream) for _ in range(3)]
    rest = parts_list(PartitionStream(dimension=4, resume_after=first[-1]))
    assert [p.parts for p in first] + rest == parts_list(partitions_of_dimension(4))


def test_resume_rejects_foreign_cursor():
    with pytest.raises(ValueError):
        PartitionStream(size=7, resume_after=from_parts([3, 3]))
    with pytest.raises(ValueError):
        PartitionStream(size=3, dimension=3)


def test_resume_after_last_is_exhausted():
    assert parts_list(PartitionStream(size=4, resume_after=from_parts([1, 1, 1, 1]))) == []
    assert parts_list(PartitionStream(size=0, resume_after=EMPTY)) == []
