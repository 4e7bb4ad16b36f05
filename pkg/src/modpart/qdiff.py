"""Fixed-length recurrences and q-difference equations for modulus 3.

Counts ``a_L(s1, s2; n)`` of partitions with parts repeated at most twice,
exact length ``L`` and alternating sum type ``(s1, s2)`` satisfy recurrences
obtained by stripping the last part ``k`` from every part.  Their generating
series ``A_L(x, y, q)`` and the partial sums ``P_L = A_0 + ... + A_L`` obey
q-difference equations; ``P_L`` converges to the full generating series of
the set P, which should equal the length-type series of the set Q.

Constant terms: ``A_0 = 1`` and ``A_L`` has no constant term for ``L >= 1``.
Counting the constant once keeps ``P_1 = 1/(1 - xq)`` and
``P_2 = 1/((1 - xq)(1 - yq^2))`` exactly as the initial conditions require.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field

from .closed_forms import factorized_Q_generator
from .errors import ParameterError
from .partitions import Constraint, alt_sum_type, partitions_up_to
from .qseries import TruncatedSeries
from .report import CellResult, VerificationReport

__all__ = [
    "FixedLengthCountTable",
    "PartialSumSeries",
    "count_by_recurrence",
    "count_by_enumeration",
    "A_series",
    "A_series_list",
    "P_series",
    "P_series_list",
    "P_series_by_enumeration",
    "table_to_series",
    "check_limit_identity",
]

Cell = tuple[int, int, int]  # (s1, s2, n)


@dataclass
class FixedLengthCountTable:
    """``a_L(s1, s2; n)`` for every length ``L <= max_length`` and ``n <= trunc``."""

    max_length: int
    trunc: int
    tables: dict[int, dict[Cell, int]] = field(default_factory=dict)

    def count(self, length: int, s1: int, s2: int, n: int) -> int:
        if length < 0 or s1 < 0 or s2 < 0 or n < 0:
            return 0
        if n > self.trunc or length > self.max_length:
            raise ParameterError(f"cell {(length, s1, s2, n)} lies outside the table")
        return self.tables.get(length, {}).get((s1, s2, n), 0)

    def total(self, s1: int, s2: int, n: int) -> int:
        """Sum over all lengths; complete once ``max_length >= n``."""
        return sum(t.get((s1, s2, n), 0) for t in self.tables.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FixedLengthCountTable):
            return NotImplemented
        keys = set(self.tables) | set(other.tables)
        return (self.max_length, self.trunc) == (other.max_length, other.trunc) and all(
            self.tables.get(k, {}) == other.tables.get(k, {}) for k in keys
        )


@dataclass(frozen=True)
class PartialSumSeries:
    N: int
    series: TruncatedSeries


def count_by_recurrence(N: int, trunc: int) -> FixedLengthCountTable:
    """Fill ``a_L`` for ``L = 0..N`` from ``a_0 = {(0, 0, 0): 1}``.

    Writing ``L = 3M + r``, the last part ``k`` is subtracted from all ``L``
    parts; the previous part either exceeded ``k`` (length ``L - 1`` remains)
    or equalled it (length ``L - 2`` remains).  A trailing part opening a new
    block adds ``k`` to ``s1``; one in second position adds ``k`` to ``s2``.
    """
    if N < 0 or trunc < 0:
        raise ParameterError("N and trunc must be nonnegative")
    tables: dict[int, dict[Cell, int]] = {0: {(0, 0, 0): 1}}
    for L in range(1, N + 1):
        r = L % 3
        ds1, ds2 = (1, 0) if r == 1 else (0, 1) if r == 2 else (0, 0)
        out: dict[Cell, int] = defaultdict(int)
        for prev in (L - 1, L - 2):
            src = tables.get(prev)
            if not src:
                continue
            for (s1, s2, n), c in src.items():
                k = 1
                while n + L * k <= trunc:
                    out[(s1 + ds1 * k, s2 + ds2 * k, n + L * k)] += c
                    k += 1
        tables[L] = dict(out)
    return FixedLengthCountTable(N, trunc, tables)


def count_by_enumeration(N: int, trunc: int) -> FixedLengthCountTable:
    """Same table by listing partitions with parts repeated at most twice."""
    tables: dict[int, dict[Cell, int]] = {L: {} for L in range(N + 1)}
    for p in partitions_up_to(trunc, Constraint.max_repeat(2)):
        if len(p) > N:
            continue
        s1, s2 = alt_sum_type(p, 3)
        row = tables[len(p)]
        row[(s1, s2, p.weight)] = row.get((s1, s2, p.weight), 0) + 1
    return FixedLengthCountTable(N, trunc, {L: t for L, t in tables.items() if t})


def table_to_series(table: FixedLengthCountTable, length: int | None = None) -> TruncatedSeries:
    """``sum a x^s1 y^s2 q^n`` for one length, or summed over all lengths."""
    acc: dict = defaultdict(int)
    for L, t in table.tables.items():
        if length is not None and L != length:
            continue
        for (s1, s2, n), c in t.items():
            acc[((s1, s2), n)] += c
    return TruncatedSeries(acc, 2, table.trunc)


_X, _Y, _NONE = (1, 0), (0, 1), (0, 0)


def A_series_list(N: int, trunc: int) -> list[TruncatedSeries]:
    """``[A_0, ..., A_N]`` from the three alternating q-difference equations."""
    zero = TruncatedSeries.zero(2, trunc)
    out = [TruncatedSeries.one(2, trunc)]
    for L in range(1, N + 1):
        r = L % 3
        z = _X if r == 1 else _Y if r == 2 else _NONE
        base = out[L - 1] + (out[L - 2] if L >= 2 else zero)
        # (A_{L-1} + A_{L-2}) * z q^L / (1 - z q^L)
        out.append(base.shift(z, L).div_one_minus(z, L))
    return out


def A_series(N: int, trunc: int) -> PartialSumSeries:
    if N < 0:
        raise ParameterError("N must be nonnegative")
    return PartialSumSeries(N, A_series_list(N, trunc)[N])


def P_series_list(N: int, trunc: int) -> list[TruncatedSeries]:
    """``[P_0, ..., P_N]`` from the initial conditions P_0, P_1, P_2 and the
    three-term recurrences alone (never from the ``A`` series)."""
    one = TruncatedSeries.one(2, trunc)
    p0 = one
    p1 = one.div_one_minus(_X, 1)
    p2 = p1.div_one_minus(_Y, 2)
    out = [p0, p1, p2][: N + 1]
    for L in range(3, N + 1):
        r = L % 3
        z = _X if r == 1 else _Y if r == 2 else _NONE
        # P_L = P_{L-1} / (1 - z q^L) - P_{L-3} z q^L / (1 - z q^L)
        head = out[L - 1].div_one_minus(z, L)
        tail = out[L - 3].shift(z, L).div_one_minus(z, L)
        out.append(head - tail)
    return out


def P_series(N: int, trunc: int) -> PartialSumSeries:
    if N < 0:
        raise ParameterError("N must be nonnegative")
    return PartialSumSeries(N, P_series_list(N, trunc)[N])


def P_series_by_enumeration(N: int, trunc: int) -> TruncatedSeries:
    """Generating series of P-partitions with at most ``N`` parts, by listing them."""
    return table_to_series(count_by_enumeration(N, trunc))


LIMIT_FLAGS = {
    "limit_identity": "P_limit_equals_Q_length_series",
    "literal_fixed_point": "P = P / ((1 - xq)(1 - yq^2)) checked separately; recorded in literal_fixed_point_holds",
}


def check_limit_identity(trunc: int, N: int | None = None) -> VerificationReport:
    """Compare ``P_N`` (from the recurrences) with the length-type series of Q.

    The fixed-point form of the modulus-3 limit identity ``P = P / ((1 - xq)(1 - yq^2))``
    cannot hold for a series with constant term 1, so the comparison made is
    the one it restates: ``lim P_N`` equals the product over residues of the
    Q-side series.  Whether the literal fixed-point form holds at this
    truncation is recorded as a flag.
    """
    if N is None:
        N = trunc
    if N < trunc:
        raise ParameterError(f"N={N} is too small to stabilise P_N up to q^{trunc}")
    start = time.perf_counter()
    p = P_series(N, trunc).series
    fq = factorized_Q_generator(3, trunc)
    cells = []
    keys = sorted(set(p.terms()) | set(fq.terms()), key=lambda k: (k[1], k[0]))
    for zs, n in keys:
        a, b = p.coeff(zs, n), fq.coeff(zs, n)
        cells.append(CellResult(m=3, n=n, type=zs, p_count=a, q_count=b))
    literal = p == p.div_one_minus(_X, 1).div_one_minus(_Y, 2)
    flags = dict(LIMIT_FLAGS, literal_fixed_point_holds=literal, stabilisation_index=N)
    return VerificationReport(
        name="modulus3_limit_identity",
        m=3,
        n_range=(0, trunc),
        cells=cells,
        flags=flags,
        seconds=time.perf_counter() - start,
    )
