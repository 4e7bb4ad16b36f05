from collections import Counter

import pytest

from modpart import alt_sum_type, length_type
from modpart.partitions import Partition
from modpart.verifier import (
    build_tables,
    census,
    special_case_checks,
    verify_conjecture,
    verify_rr_companions,
    verify_special_cases,
    witnesses,
)

from oracles import all_partitions, alt_type, len_type, max_rep


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 5, 9, 12])
def test_tables_match_multiset_oracle(m, n):
    p, q = build_tables(m, n, [n])
    ps = [x for x in all_partitions(n) if max_rep(x) <= m - 1]
    qs = [x for x in all_partitions(n) if all(v % m for v in x)]
    assert {t: p.get(t, n) for t in p.types_at(n)} == dict(Counter(alt_type(x, m) for x in ps))
    assert {t: q.get(t, n) for t in q.types_at(n)} == dict(Counter(len_type(x, m) for x in qs))


def test_table_examples():
    p, q = build_tables(3, 11, [11])
    assert p.get((3, 1), 11) == q.get((3, 1), 11) == 4
    p, q = build_tables(4, 10, [10])
    assert p.get((2, 2, 0), 10) == q.get((2, 2, 0), 10) == 2
    assert p.get((1, 3, 1), 10) == q.get((1, 3, 1), 10) == 1


@pytest.mark.parametrize("m, max_n", [(2, 40), (3, 40), (5, 30)])
def test_conjecture_verified(m, max_n):
    rep = verify_conjecture(m, max_n)
    assert rep.verified, rep.mismatches[:3]
    assert rep.n_range == (1, max_n)


def test_sharded_run_merges_to_full_run():
    full = verify_conjecture(4, 14)
    parts = [verify_conjecture(4, 14, ns=range(k, 15, 3)).cells for k in (1, 2, 3)]
    merged = sorted((c for ch in parts for c in ch), key=lambda c: (c.n, c.type))
    assert [c.to_dict() for c in merged] == [c.to_dict() for c in full.cells]


def test_family_filters():
    rep = verify_conjecture(3, 12, family="sigma2")
    assert rep.cells and all(2 in c.type for c in rep.cells)
    rep = verify_conjecture(3, 12, family="pure")
    assert all(sum(1 for s in c.type if s) == 1 for c in rep.cells)


def test_witnesses_are_recheckable():
    w = witnesses(3, (1, 2), 11)
    assert len(w["p_side"]) == len(w["q_side"]) == 4
    for s in w["p_side"]:
        assert alt_sum_type(Partition.parse(s), 3) == (1, 2)
    for s in w["q_side"]:
        assert length_type(Partition.parse(s), 3) == (1, 2)


def test_special_cases():
    checks = special_case_checks(3, 20)
    assert set(checks) == {"pure", "total_marginal", "sigma2", "one-sigma-one", "sigma_one_decomposition"}
    assert all(r.verified for r in checks.values())
    assert checks["pure"].cell((3, 0), 12).p_count == 3
    tot = checks["total_marginal"].cell((), 10)
    assert tot.p_count == tot.q_count == sum(1 for x in all_partitions(10) if all(v % 3 for v in x))
    deco = checks["sigma_one_decomposition"].cell((3, 1), 14)
    assert deco.p_count == deco.q_count == 7


@pytest.mark.parametrize("m", [3, 4, 5])
def test_special_cases_report(m):
    rep = verify_special_cases(m, 18)
    assert rep.verified
    assert set(rep.flags["checks"].values()) == {"verified"}


def test_census_at_sixteen():
    assert census(3, 16) == {"total": 89, "pure": 19, "proved_families": 55, "other_mixed": 15}


@pytest.mark.parametrize("d, i", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_rr_companions_standard(d, i):
    assert verify_rr_companions(d, i, 22).verified


def test_rr_companion_empty_weight_cell():
    rep = verify_rr_companions(2, 2, 3)
    c = rep.cell((), 0)
    assert (c.p_count, c.q_count) == (0, 0)
    assert rep.flags["empty_partition"] == "excluded"


def test_rr_literal_reading_differs():
    rep = verify_rr_companions(2, 1, 8, "literal")
    assert not rep.verified
    for c in rep.mismatches:
        assert c.witnesses and c.witnesses["q_side"]
