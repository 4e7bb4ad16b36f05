"""Closed-form generating functions for the families proved by q-series analysis.

Everything is evaluated numerically as a :class:`TruncatedSeries`; nothing
here rewrites expressions symbolically.  One ``z`` variable tracks the free
alternating sum ``s`` of the types ``(s, 0, ..., 0)``, ``(s, 1, 0, ..., 0)``
and, for modulus 3, ``(s, 2)``.

The ``(s, 2)`` family for modulus 3 is assembled from per-term formulas,
organised by :class:`Family`:

========  ==================  ========================================
family    length              term index
========  ==================  ========================================
A_FULL    3n + 3              distance between the gap1 units, 0..n-1
A_SHORT   3n + 2              distance, 0..n-1
A_TAIL    3n + 1              distance, 0..n-2
B         3n+3 / 3n+1 / 3n+2  1..4 (see :data:`CASE_B_LENGTHS`)
========  ==================  ========================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import ParameterError
from .partitions import Case, check_modulus
from .qseries import Factor, TruncatedSeries, pochhammer_chain

__all__ = [
    "Family",
    "TermSpec",
    "CASE_B_LENGTHS",
    "pure_type_generator",
    "lemma_term",
    "terms_for",
    "case_a_generating_function",
    "case_b_generating_function",
    "sigma_two_generating_function",
    "inverse_z_aggregate",
    "inverse_z2_aggregate",
    "inverse_z_closed_form",
    "inverse_z2_closed_form",
    "sigma_two_closed_form",
    "sigma_one_closed_form",
    "rhs_companion",
    "factorized_Q_generator",
]


class Family(enum.Enum):
    A_FULL = "A_FULL"
    A_SHORT = "A_SHORT"
    A_TAIL = "A_TAIL"
    B = "B"


# term index -> (length as a function of n, whether the gap2 unit is the last unit)
CASE_B_LENGTHS = {
    1: (lambda n: 3 * n + 3, False),
    2: (lambda n: 3 * n + 3, True),
    3: (lambda n: 3 * n + 1, False),
    4: (lambda n: 3 * n + 2, True),
}


@dataclass(frozen=True)
class TermSpec:
    family: Family
    n: int
    term_index: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        failed = [c for c, ok in self._gates() if not ok]
        if failed:
            raise ParameterError(f"{self} violates its validity condition(s): {', '.join(failed)}")

    def _gates(self) -> list[tuple[str, bool]]:
        n, t = self.n, self.term_index
        if self.family is Family.B:
            if t not in CASE_B_LENGTHS:
                return [("term index in 1..4", False)]
            need = 1 if t in (1, 3) else 0
            return [(f"n>={need}", n >= need)]
        if t < 0:
            return [("term index >= 0", False)]
        if self.family is Family.A_TAIL:
            return [(f"n>={t + 2}", n >= t + 2)]
        return [(f"n>={t + 1}", n >= t + 1)]

    @property
    def conditions(self) -> tuple[str, ...]:
        """Validity condition of each bracketed sub-term."""
        t = self.term_index
        if self.family is Family.B:
            return ("n>=1",) if t in (1, 3) else ("n>=0",)
        if self.family is Family.A_TAIL:
            return (f"n>={t + 2}",)
        if self.family is Family.A_FULL:
            return (f"n>={t + 2}", f"n>={t + 1}")
        return ("n>=1",) if t == 0 else (f"n>={t + 1}",)

    @property
    def length(self) -> int:
        n = self.n
        if self.family is Family.A_FULL:
            return 3 * n + 3
        if self.family is Family.A_SHORT:
            return 3 * n + 2
        if self.family is Family.A_TAIL:
            return 3 * n + 1
        return CASE_B_LENGTHS[self.term_index][0](n)

    @property
    def case(self) -> Case:
        return Case.B if self.family is Family.B else Case.A

    @property
    def distance(self) -> int | None:
        return None if self.family is Family.B else self.term_index

    @property
    def special_last(self) -> bool | None:
        """For Case B: whether the gap2 unit is the final basic unit."""
        return CASE_B_LENGTHS[self.term_index][1] if self.family is Family.B else None

    def __str__(self) -> str:
        return f"{self.family.value}(n={self.n}, term={self.term_index})"


# --------------------------------------------------------------------------
# pure types


def _pure_chain(m: int, n: int, N: int) -> TruncatedSeries:
    """Pure type ``(s, 0, ..., 0)`` partitions of length ``mn`` or ``mn + 1``."""
    factors = []
    for j in range(n):
        factors.append(Factor(0, m * j + 1, (1,), m * j + 1))
        factors.append(Factor(None, m * j + m, (), m * j + m))
    factors.append(Factor(0, m * n + 1))
    return pochhammer_chain(factors, N)


def pure_type_generator(m: int, max_units: int | None, N: int) -> TruncatedSeries:
    """Generating function of pure types ``(s, 0, ..., 0)`` by ``z^s q^weight``.

    Sums the alternating product chain over ``n = 0..max_units``; with
    ``max_units=None`` the sum stops once a chain's lowest weight
    ``m n^2 + n`` exceeds ``N``.
    """
    check_modulus(m)
    total = TruncatedSeries.zero(1, N)
    n = 0
    while (max_units is None and m * n * n + n <= N) or (max_units is not None and n <= max_units):
        total = total + _pure_chain(m, n, N)
        n += 1
    return total


# --------------------------------------------------------------------------
# modulus 3, type (s, 2)

# A bracket is a list of monomials (coefficient, z power, q power) multiplying
# the prefix; the z power is -1 or -2 and q powers may be negative.
Bracket = list[tuple[int, int, int]]


def _prefix(spec: TermSpec) -> tuple[int, int, list[Factor]]:
    n = spec.n
    full = spec.family is Family.A_FULL or (spec.family is Family.B and spec.term_index in (1, 2))
    dens = [Factor(0, 3 * j + 1) for j in range(n + 1)]
    dens += [Factor(None, 3 * j) for j in range(1, n + 2 if full else n + 1)]
    q_exp = 3 * n * n + 7 * n + 4 if full else 3 * n * n + 4 * n + 1
    return n + 1, q_exp, dens


def _adjacent_bracket(n: int) -> Bracket:
    # two gap1 units next to each other, not at the end: k = 1..n-1
    out: Bracket = []
    for k in range(1, n):
        out += [(1, -2, -(3 * k + 1)), (1, -1, -3 * k), (-1, -1, 0)]
    return out


def _closing_pair(n: int) -> Bracket:
    # q^2/z^2 + q^3 (1 - q^{3n}) / z
    return [(1, -2, 2), (1, -1, 3), (-1, -1, 3 + 3 * n)]


def _bracket(spec: TermSpec) -> Bracket:
    n, d = spec.n, spec.term_index
    fam = spec.family
    if fam is Family.B:
        if d in (1, 3):
            return [(n, -1, 0)]
        return [(1, -1, 3 * n + 3)]
    if fam is Family.A_FULL:
        if d == 0:
            return _adjacent_bracket(n) + _closing_pair(n)
        inner = [(1, -2, -(6 * k + 3 * d + 1)) for k in range(1, n - d)]
        return inner + [(1, -2, -(3 * n - 3 * d - 2))]
    if fam is Family.A_SHORT:
        if d == 0:
            return _closing_pair(n)
        return [(1, -2, -(3 * n - 3 * d - 2))]
    if d == 0:
        return _adjacent_bracket(n)
    return [(1, -2, -(6 * k + 3 * d + 1)) for k in range(1, n - d)]


def lemma_term(spec: TermSpec, N: int, part: str = "all") -> TruncatedSeries:
    """Evaluate one term as a series in ``z`` (tracking ``s``) and ``q``.

    ``part`` selects the bracket monomials carrying ``1/z`` (``"inv_z"``),
    ``1/z^2`` (``"inv_z2"``) or both (``"all"``).  Negative powers are
    absorbed into the ``z^{n+1}`` numerator before expansion.
    """
    if part not in ("all", "inv_z", "inv_z2"):
        raise ParameterError(f"unknown part {part!r}")
    z_pre, q_pre, dens = _prefix(spec)
    poly: dict = {}
    for c, zp, qp in _bracket(spec):
        if part == "inv_z" and zp != -1 or part == "inv_z2" and zp != -2:
            continue
        zz, qq = z_pre + zp, q_pre + qp
        if zz < 0 or qq < 0:
            raise ParameterError(f"{spec}: net exponent z^{zz} q^{qq} is negative")
        key = ((zz,), qq)
        poly[key] = poly.get(key, 0) + c
    s = TruncatedSeries(poly, 1, N)
    for f in dens:
        if not s:
            break
        s = s.div_one_minus((1,) if f.var is not None else None, f.a)
    return s


def _min_q(spec: TermSpec) -> int:
    _, q_pre, _ = _prefix(spec)
    return min(q_pre + qp for _, _, qp in _bracket(spec))


def terms_for(n: int, families=tuple(Family)) -> Iterator[TermSpec]:
    """Every valid term with unit-count parameter ``n`` in the given families."""
    for fam in families:
        if fam is Family.B:
            idx = [t for t in (1, 2, 3, 4) if n >= (1 if t in (1, 3) else 0)]
        elif fam is Family.A_TAIL:
            idx = range(0, n - 1)
        else:
            idx = range(0, n) if n >= 1 else range(0)
        for t in idx:
            yield TermSpec(fam, n, t)


def _assemble(families, N: int, max_n: int | None, part: str = "all") -> TruncatedSeries:
    total = TruncatedSeries.zero(1, N)
    n = 0
    while True:
        specs = list(terms_for(n, families))
        if max_n is not None and n > max_n:
            break
        live = [s for s in specs if _min_q(s) <= N]
        if max_n is None and not live and n >= 2:
            break
        for spec in live:
            total = total + lemma_term(spec, N, part)
        n += 1
    return total


_CASE_A = (Family.A_FULL, Family.A_SHORT, Family.A_TAIL)


def case_a_generating_function(N: int, max_n: int | None = None) -> TruncatedSeries:
    """Sum of every Case A term over ``n``."""
    return _assemble(_CASE_A, N, max_n)


def case_b_generating_function(N: int, max_n: int | None = None) -> TruncatedSeries:
    return _assemble((Family.B,), N, max_n)


def sigma_two_generating_function(N: int, max_n: int | None = None) -> TruncatedSeries:
    """All ``(s, 2)`` partitions for modulus 3, assembled term by term."""
    return _assemble(tuple(Family), N, max_n)


def inverse_z_aggregate(N: int, max_n: int | None = None) -> TruncatedSeries:
    """Sum of the bracket monomials carrying ``1/z`` across all families."""
    return _assemble(tuple(Family), N, max_n, "inv_z")


def inverse_z2_aggregate(N: int, max_n: int | None = None) -> TruncatedSeries:
    """Sum of the bracket monomials carrying ``1/z^2`` (Case A only)."""
    return _assemble(tuple(Family), N, max_n, "inv_z2")


def _q_only(*pairs: tuple[int, int], N: int) -> TruncatedSeries:
    """``q^num / prod (1 - q^a)`` as a one-z-variable series."""
    num = sum(p for p, _ in pairs)
    s = TruncatedSeries.monomial((0,), num, 1, N)
    for _, a in pairs:
        if a:
            s = s.div_one_minus(None, a)
    return s


def inverse_z_closed_form(N: int) -> TruncatedSeries:
    """pure(3) * q^4 / (1 - q^3)."""
    return pure_type_generator(3, None, N) * _q_only((4, 3), N=N)


def inverse_z2_closed_form(N: int) -> TruncatedSeries:
    """pure(3) * q^10 / ((1 - q^3)(1 - q^6))."""
    return pure_type_generator(3, None, N) * _q_only((10, 3), (0, 6), N=N)


def sigma_two_closed_form(N: int) -> TruncatedSeries:
    """pure(3) * q^4 / ((1 - q^3)(1 - q^6))."""
    return pure_type_generator(3, None, N) * _q_only((4, 3), (0, 6), N=N)


def sigma_one_closed_form(m: int, N: int) -> TruncatedSeries:
    """pure(m) * q^2 / (1 - q^m): the type ``(s, 1, 0, ..., 0)`` series."""
    check_modulus(m)
    return pure_type_generator(m, None, N) * _q_only((2, m), N=N)


# --------------------------------------------------------------------------
# length-type side


def _residue_series(m: int, i: int, N: int, num_z_vars: int = 1, var: int = 0) -> TruncatedSeries:
    """Partitions into parts congruent to ``i`` mod ``m``, z counting parts."""
    zs = [0] * num_z_vars
    zs[var] = 1
    s = TruncatedSeries.one(num_z_vars, N)
    part = i
    while part <= N:
        s = s.div_one_minus(tuple(zs), part)
        part += m
    return s


def rhs_companion(m: int, kind: str, N: int, i: int | None = None, j: int | None = None) -> TruncatedSeries:
    """Length-type series obtained by multiplying a one-residue series by a rational factor.

    ``kind``:

    * ``"sigma_two"`` (m = 3): ``b(l, 2; n)``, i.e. parts ``= 1 mod 3`` counted
      by ``z`` times ``q^4 / ((1 - q^3)(1 - q^6))``;
    * ``"two_sigma"`` (m = 3): ``b(2, l; n)``, parts ``= 2 mod 3`` counted by
      ``z`` times ``q^2 / ((1 - q^3)(1 - q^6))``;
    * ``"one_extra"``: ``l`` parts ``= i`` and one part ``= j`` (mod m), i.e. the
      residue-``i`` series times ``q^j / (1 - q^m)``.
    """
    check_modulus(m)
    if kind in ("sigma_two", "two_sigma"):
        if m != 3:
            raise ParameterError(f"{kind} is defined for modulus 3 only")
        if kind == "sigma_two":
            return _residue_series(3, 1, N) * _q_only((4, 3), (0, 6), N=N)
        return _residue_series(3, 2, N) * _q_only((2, 3), (0, 6), N=N)
    if kind == "one_extra":
        if i is None or j is None or not (1 <= i < m and 1 <= j < m) or i == j:
            raise ParameterError(f"one_extra needs distinct residues 1 <= i, j <= {m - 1}")
        return _residue_series(m, i, N) * _q_only((j, m), N=N)
    raise ParameterError(f"unknown companion kind {kind!r}")


def factorized_Q_generator(m: int, N: int) -> TruncatedSeries:
    """Product over residues ``i`` of the residue-``i`` series in its own ``z_i``."""
    check_modulus(m)
    s = TruncatedSeries.one(m - 1, N)
    for i in range(1, m):
        s = s * _residue_series(m, i, N, m - 1, i - 1)
    return s

