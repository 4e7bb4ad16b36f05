"""Double-enumeration checks of the alternating-sum/length-type identity.

For a modulus ``m`` the P side lists partitions with every part repeated at
most ``m - 1`` times, keyed by alternating sum type; the Q side lists
partitions with no part divisible by ``m``, keyed by length type.  The
identity claims equal counts in every ``(type, n)`` cell.

The empty partition is left out of every cell, so ``n`` starts at 1.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import ParameterError
from .partitions import (
    Constraint,
    alt_sum_type,
    check_modulus,
    enumerate_partitions,
    is_mixed,
    is_pure,
    length_type,
)
from .report import CellResult, VerificationReport

__all__ = [
    "CountTable",
    "build_tables",
    "verify_conjecture",
    "verify_special_cases",
    "special_case_checks",
    "verify_rr_companions",
    "witnesses",
    "census",
    "type_family",
    "FAMILIES",
]

TypeVec = tuple[int, ...]


@dataclass
class CountTable:
    m: int
    side: str  # "P" or "Q"
    entries: dict[tuple[TypeVec, int], int] = field(default_factory=dict)

    def get(self, type_: Sequence[int], n: int) -> int:
        return self.entries.get((tuple(type_), n), 0)

    def types_at(self, n: int) -> set[TypeVec]:
        return {t for (t, k) in self.entries if k == n}

    def ns(self) -> list[int]:
        return sorted({k for _, k in self.entries})

    def total(self, n: int) -> int:
        return sum(c for (t, k), c in self.entries.items() if k == n)


def _p_constraint(m: int) -> Constraint:
    return Constraint.max_repeat(m - 1)


def _q_constraint(m: int) -> Constraint:
    return Constraint.no_parts_divisible_by(m)


def build_tables(m: int, max_n: int, ns: Iterable[int] | None = None) -> tuple[CountTable, CountTable]:
    """Count both sides for every ``n`` in ``ns`` (default ``1..max_n``)."""
    check_modulus(m)
    if max_n < 0:
        raise ParameterError(f"max_n must be nonnegative, got {max_n}")
    ns = range(1, max_n + 1) if ns is None else [n for n in ns if 1 <= n <= max_n]
    p_side: dict = defaultdict(int)
    q_side: dict = defaultdict(int)
    pc, qc = _p_constraint(m), _q_constraint(m)
    for n in ns:
        for p in enumerate_partitions(n, pc):
            p_side[(alt_sum_type(p, m), n)] += 1
        for p in enumerate_partitions(n, qc):
            q_side[(length_type(p, m), n)] += 1
    return CountTable(m, "P", dict(p_side)), CountTable(m, "Q", dict(q_side))


def witnesses(m: int, type_: Sequence[int], n: int) -> dict[str, list[str]]:
    """The partitions behind a ``(type, n)`` cell on each side."""
    t = tuple(type_)
    return {
        "p_side": [str(p) for p in enumerate_partitions(n, _p_constraint(m)) if alt_sum_type(p, m) == t],
        "q_side": [str(p) for p in enumerate_partitions(n, _q_constraint(m)) if length_type(p, m) == t],
    }


# --------------------------------------------------------------------------
# type families


def _is_sigma_two(t: TypeVec) -> bool:
    # (s, 2) or (2, s), modulus 3
    return len(t) == 2 and 2 in t


def _is_one_sigma_one(t: TypeVec) -> bool:
    # exactly two nonzero entries, one of them equal to 1
    nz = [s for s in t if s]
    return len(t) >= 2 and len(nz) == 2 and 1 in nz


FAMILIES: dict[str, Callable[[TypeVec], bool]] = {
    "all": lambda t: True,
    "pure": is_pure,
    "sigma2": _is_sigma_two,
    "one-sigma-one": _is_one_sigma_one,
}


def type_family(name: str) -> Callable[[TypeVec], bool]:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ParameterError(f"unknown type family {name!r}; choose from {sorted(FAMILIES)}") from None


def _compare(m: int, p: CountTable, q: CountTable, ns: Iterable[int], keep: Callable[[TypeVec], bool],
             with_witnesses: bool) -> list[CellResult]:
    cells = []
    for n in ns:
        for t in sorted(p.types_at(n) | q.types_at(n)):
            if not keep(t):
                continue
            cell = CellResult(m, n, t, p.get(t, n), q.get(t, n))
            if with_witnesses and cell.status == "mismatch":
                cell.witnesses = witnesses(m, t, n)
            cells.append(cell)
    return cells


def verify_conjecture(m: int, max_n: int, ns: Iterable[int] | None = None, family: str = "all",
                      with_witnesses: bool = True) -> VerificationReport:
    """Cell-by-cell comparison of the P and Q tables.

    Types seen on either side are compared, so a cell present on one side only
    is checked against 0.  Mismatched cells carry both witness lists.
    """
    start = time.perf_counter()
    keep = type_family(family)
    ns = list(range(1, max_n + 1) if ns is None else ns)
    p, q = build_tables(m, max_n, ns)
    cells = _compare(m, p, q, ns, keep, with_witnesses)
    return VerificationReport(
        name="conjecture",
        m=m,
        n_range=(min(ns, default=1), max(ns, default=0)),
        cells=cells,
        flags={"types": family},
        seconds=time.perf_counter() - start,
    )


def special_case_checks(m: int, max_n: int) -> dict[str, VerificationReport]:
    """Restricted comparisons, one report per check.

    ``pure``
        pure-type cells (all parts in one residue class on the Q side).
    ``total_marginal``
        P counts grouped by total alternating sum against Q counts grouped by
        number of parts; type ``()`` holds the grand totals per ``n``.
    ``sigma2`` (m = 3)
        types ``(s, 2)`` and ``(2, s)``.
    ``one-sigma-one`` (m >= 3)
        two nonzero entries, one of them 1.
    ``sigma_one_decomposition``
        ``a(s, 1, 0.., n)`` against ``sum_k a(s, 0, .., n - 2 - m k)``.
    """
    check_modulus(m)
    start = time.perf_counter()
    p, q = build_tables(m, max_n)
    ns = range(1, max_n + 1)
    out: dict[str, VerificationReport] = {}

    def rep(name, cells):
        out[name] = VerificationReport(name, m, (1, max_n), cells, {}, time.perf_counter() - start)

    rep("pure", _compare(m, p, q, ns, is_pure, True))

    marg = []
    for n in ns:
        pt: dict = defaultdict(int)
        qt: dict = defaultdict(int)
        for (t, k), c in p.entries.items():
            if k == n:
                pt[sum(t)] += c
        for (t, k), c in q.entries.items():
            if k == n:
                qt[sum(t)] += c
        for s in sorted(set(pt) | set(qt)):
            marg.append(CellResult(m, n, (s,), pt.get(s, 0), qt.get(s, 0)))
        marg.append(CellResult(m, n, (), p.total(n), q.total(n)))
    rep("total_marginal", marg)

    if m == 3:
        rep("sigma2", _compare(m, p, q, ns, _is_sigma_two, True))
    if m >= 3:
        rep("one-sigma-one", _compare(m, p, q, ns, _is_one_sigma_one, True))

    deco = []
    zeros = (0,) * (m - 3) if m >= 3 else ()
    if m >= 3:
        for n in ns:
            for s in range(1, n + 1):
                lhs = p.get((s, 1) + zeros, n)
                rhs = sum(p.get((s, 0) + zeros, k) for k in range(n - 2, 0, -m))
                if lhs or rhs:
                    deco.append(CellResult(m, n, (s, 1) + zeros, lhs, rhs))
        rep("sigma_one_decomposition", deco)
    return out


def verify_special_cases(m: int, max_n: int) -> VerificationReport:
    """All :func:`special_case_checks` merged into one report."""
    start = time.perf_counter()
    checks = special_case_checks(m, max_n)
    cells = [c for r in checks.values() for c in r.cells]
    flags = {"checks": {name: ("verified" if r.verified else "mismatch") for name, r in checks.items()}}
    return VerificationReport("special_cases", m, (1, max_n), cells, flags, time.perf_counter() - start)


def verify_rr_companions(d: int, i: int, max_n: int, interpretation: str = "standard",
                         with_witnesses: bool = False) -> VerificationReport:
    """Gap-condition partitions against P-side types vanishing at two positions.

    For ``m = 2d + 1``, cell ``n`` compares the number of nonempty partitions
    of ``n`` with parts repeated at most ``2d`` times whose alternating sum
    type is zero at positions ``i`` and ``2d + 1 - i`` (``p_count``) with the
    number of nonempty partitions satisfying the Andrews-Gordon style
    constraint (``q_count``).  The cell type is ``()``.
    """
    gap = Constraint.andrews_gordon(d, i, interpretation)
    m = 2 * d + 1
    start = time.perf_counter()
    a, b = i - 1, 2 * d - i
    cells = []
    for n in range(0, max_n + 1):
        p_list, g_list = [], []
        if n:
            for p in enumerate_partitions(n, _p_constraint(m)):
                t = alt_sum_type(p, m)
                if t[a] == 0 and t[b] == 0 and any(t):
                    p_list.append(f"{p} {t}")
            g_list = [str(p) for p in enumerate_partitions(n, gap)]
        cell = CellResult(m, n, (), len(p_list), len(g_list))
        if with_witnesses or cell.status == "mismatch":
            cell.witnesses = {"p_side": p_list, "q_side": g_list}
        cells.append(cell)
    return VerificationReport(
        name="rr_companion",
        m=m,
        n_range=(0, max_n),
        cells=cells,
        flags={"d": d, "i": i, "interpretation": interpretation, "empty_partition": "excluded"},
        seconds=time.perf_counter() - start,
    )


def census(m: int, n: int) -> dict[str, int]:
    """Split P-side partitions of ``n`` into pure, proved-family and other mixed types.

    The proved families are ``(s, 2)``/``(2, s)`` (modulus 3 only) and the
    types with two nonzero entries one of which is 1.
    """
    p, _ = build_tables(m, n, [n])
    out = {"total": 0, "pure": 0, "proved_families": 0, "other_mixed": 0}
    for (t, _), c in p.entries.items():
        out["total"] += c
        if is_pure(t):
            out["pure"] += c
        elif (m == 3 and _is_sigma_two(t)) or _is_one_sigma_one(t):
            out["proved_families"] += c
        elif is_mixed(t):
            out["other_mixed"] += c
    return out
