from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from mackey.partitions import (
    EMPTY,
    Partition,
    dim_schur,
    format_partition,
    parse_partition,
    partitions_of,
    partitions_up_to,
    syt_count,
)

from oracles import ssyt_count, syt_enumerate


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                         min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))


def test_normalization_strips_zeros():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition([0, 0]) == EMPTY
    assert Partition([3, 1]).parts == (3, 1)


def test_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    with pytest.raises(TypeError):
        Partition([1.5])


def test_immutable_and_hashable():
    p = Partition([2, 1])
    with pytest.raises(AttributeError):
        p.parts = (3,)
    assert len({Partition([2, 1]), Partition([2, 1]), Partition([3])}) == 2


def test_conjugate_examples():
    assert EMPTY.conjugate() == EMPTY
    assert Partition([2, 1]).conjugate() == Partition([2, 1])
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])


def test_conjugate_involution_grid():
    for lam in partitions_up_to(10):
        assert lam.conjugate().conjugate() == lam


@given(partition_strategy())
def test_conjugate_involution_random(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_contains_examples():
    assert Partition([3, 1]).contains(EMPTY)
    assert Partition([3, 1]).contains(Partition([2, 1]))
    assert not Partition([3, 1]).contains(Partition([1, 1, 1]))


@given(partition_strategy(max_n=8), partition_strategy(max_n=8))
def test_contains_conjugate_compatible(lam, mu):
    assert lam.contains(mu) == lam.conjugate().contains(mu.conjugate())


def test_syt_count_examples():
    assert syt_count(EMPTY) == 1
    assert syt_count(Partition([2, 1])) == 2
    assert syt_count(Partition([2, 2])) == 2


def test_syt_count_matches_enumeration():
    for lam in partitions_up_to(7):
        assert syt_count(lam) == syt_enumerate(lam.parts), lam


def test_syt_squares_sum_to_factorial():
    for k in range(8):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(k)) == factorial(k)


def test_dim_schur_examples():
    assert dim_schur(EMPTY, 5) == 1
    assert dim_schur(Partition([1, 1]), 3) == 3
    assert dim_schur(Partition([2, 1]), 3) == 8


def test_dim_schur_matches_ssyt_enumeration():
    for lam in partitions_up_to(5):
        for n in range(5):
            assert dim_schur(lam, n) == ssyt_count(lam.parts, n), (lam, n)


def test_dim_schur_vanishing():
    assert dim_schur(Partition([1, 1, 1]), 2) == 0
    assert dim_schur(Partition([1, 1]), 2) == 1


def test_partitions_of_counts():
    # partition numbers p(0)..p(10)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected):
        assert len(partitions_of(n)) == count


def test_text_form_round_trip():
    assert parse_partition("3,1") == Partition([3, 1])
    assert parse_partition("-") == EMPTY
    assert format_partition(Partition([3, 1])) == "3,1"
    assert format_partition(EMPTY) == "-"
    for lam in partitions_up_to(6):
        assert parse_partition(format_partition(lam)) == lam


def test_parse_rejects_garbage():
    for bad in ["", "1,2", "a", "2,,1", "0"]:
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_sort_key_orders_by_degree_then_lex():
    ordered = sorted([Partition([2]), Partition([1]), Partition([1, 1])])
    assert ordered == [Partition([1]), Partition([1, 1]), Partition([2])]
