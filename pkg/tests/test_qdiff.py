import pytest
from hypothesis import given
from hypothesis import strategies as st

from modpart import ParameterError, TruncatedSeries
from modpart.qdiff import (
    A_series,
    A_series_list,
    P_series,
    P_series_by_enumeration,
    P_series_list,
    check_limit_identity,
    count_by_enumeration,
    count_by_recurrence,
    table_to_series,
)

from oracles import all_partitions, alt_type, max_rep

TRUNC = 30


@pytest.fixture(scope="module")
def tables():
    return count_by_recurrence(TRUNC, TRUNC), count_by_enumeration(TRUNC, TRUNC)


def test_recurrence_table_equals_enumeration(tables):
    rec, enum = tables
    assert rec == enum


@pytest.mark.parametrize("n", range(0, 12))
def test_table_against_multiset_oracle(n, tables):
    rec, _ = tables
    want = {}
    for p in all_partitions(n):
        if max_rep(p) <= 2:
            key = (len(p), alt_type(p, 3))
            want[key] = want.get(key, 0) + 1
    for (L, (s1, s2)), c in want.items():
        assert rec.count(L, s1, s2, n) == c


@given(st.integers(0, 12), st.integers(0, 30))
def test_recurrence_oracle_equivalence_on_random_bounds(N, trunc):
    assert count_by_recurrence(N, trunc) == count_by_enumeration(N, trunc)


def test_cell_examples(tables):
    rec, _ = tables
    assert rec.count(0, 0, 0, 0) == 1
    assert rec.total(9, 1, 11) == 1  # 10+1
    assert rec.total(3, 1, 14) == 7
    assert rec.total(6, 1, 11) == 2
    assert rec.count(-1, 0, 0, 0) == 0
    with pytest.raises(ParameterError):
        rec.count(2, 0, 0, TRUNC + 1)


def test_A_series_match_fixed_length_tables(tables):
    _, enum = tables
    a = A_series_list(12, TRUNC)
    for L in range(13):
        assert a[L] == table_to_series(enum, L)


def test_A_series_examples():
    a1 = A_series(1, 10).series
    assert a1.coeff((1, 0), 1) == 1
    assert a1.coeff((0, 0), 0) == 0
    a3 = A_series(3, 30).series
    for k in range(1, 11):
        assert a3.coeff((0, 0), 3 * k) == 0  # k+k+k repeats a part three times
    a2 = A_series(2, 10).series
    assert a2.coeff((1, 1), 3) == 1  # 2+1


def test_P_series_initial_conditions():
    p = P_series_list(2, 10)
    assert p[0] == TruncatedSeries.one(2, 10)
    assert p[1].coeff((3, 0), 3) == 1
    assert p[2].coeff((1, 1), 3) == 1


@pytest.mark.parametrize("N", range(0, 13))
def test_P_series_recurrences_match_enumeration(N):
    assert P_series(N, TRUNC).series == P_series_by_enumeration(N, TRUNC)


def test_P_series_partial_sums_of_A():
    a = A_series_list(9, 20)
    p = P_series_list(9, 20)
    acc = TruncatedSeries.zero(2, 20)
    for L in range(10):
        acc = acc + a[L]
        assert p[L] == acc


def test_P_limit_cell_examples():
    s = P_series(11, 11).series
    assert s.coeff((1, 2), 11) == 4
    assert s.coeff((2, 3), 11) == 2


def test_limit_identity():
    rep = check_limit_identity(TRUNC)
    assert rep.verified
    assert rep.flags["literal_fixed_point_holds"] is False
    assert rep.cell((2, 3), 11).p_count == rep.cell((2, 3), 11).q_count == 2


def test_limit_identity_trivial_truncation():
    rep = check_limit_identity(0)
    assert rep.verified
    assert [(c.type, c.p_count, c.q_count) for c in rep.cells] == [((0, 0), 1, 1)]


def test_limit_identity_needs_enough_lengths():
    with pytest.raises(ParameterError):
        check_limit_identity(10, N=5)
