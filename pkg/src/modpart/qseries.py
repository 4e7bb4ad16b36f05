"""Exact truncated power series in ``z_1, ..., z_k`` and ``q``.

Only the q-degree is truncated: every factor used in this package attaches
at least one power of ``q`` to each power of a ``z`` variable, so bounding
the q-degree bounds everything.  Coefficients are Python integers.

A term is keyed by ``(z_exponents, q_exponent)``.  Reading a coefficient
above the truncation raises :class:`TruncationError` instead of returning 0.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ParameterError, TruncationError

__all__ = [
    "TruncatedSeries",
    "Factor",
    "geometric_factor",
    "pochhammer_chain",
    "series_add",
    "series_mul",
    "coeff",
]

Key = tuple[tuple[int, ...], int]


class TruncatedSeries:
    __slots__ = ("num_z_vars", "trunc", "_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[Key, int] | Iterable[tuple[Key, int]], num_z_vars: int, trunc: int):
        if num_z_vars < 0 or trunc < 0:
            raise ParameterError("num_z_vars and trunc must be nonnegative")
        self.num_z_vars = num_z_vars
        self.trunc = trunc
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Key, int] = defaultdict(int)
        for (zs, k), c in items:
            zs = tuple(zs)
            if len(zs) != num_z_vars:
                raise ParameterError(f"z exponent {zs} does not have {num_z_vars} entries")
            if k < 0 or any(e < 0 for e in zs):
                raise ParameterError(f"negative exponent in term {(zs, k)}")
            if k <= trunc:
                acc[(zs, k)] += c
        self._coeffs = {key: c for key, c in acc.items() if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, num_z_vars: int, trunc: int) -> "TruncatedSeries":
        return cls({}, num_z_vars, trunc)

    @classmethod
    def one(cls, num_z_vars: int, trunc: int) -> "TruncatedSeries":
        return cls.monomial((0,) * num_z_vars, 0, num_z_vars, trunc)

    @classmethod
    def monomial(cls, z_exponents: Sequence[int], q_exponent: int, num_z_vars: int,
                 trunc: int, c: int = 1) -> "TruncatedSeries":
        zs = tuple(z_exponents) if z_exponents else (0,) * num_z_vars
        return cls({(zs, q_exponent): c}, num_z_vars, trunc)

    @classmethod
    def _raw(cls, coeffs: dict[Key, int], num_z_vars: int, trunc: int) -> "TruncatedSeries":
        # caller guarantees a canonical map
        s = cls.__new__(cls)
        s.num_z_vars = num_z_vars
        s.trunc = trunc
        s._coeffs = coeffs
        s._hash = None
        return s

    # -- inspection ---------------------------------------------------------

    def items(self):
        """Terms sorted by q-exponent, then by z-exponents."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def terms(self) -> dict[Key, int]:
        return dict(self._coeffs)

    def coeff(self, z_exponents: Sequence[int], q_exponent: int) -> int:
        if q_exponent > self.trunc:
            raise TruncationError(
                f"q^{q_exponent} lies beyond the truncation q^{self.trunc}"
            )
        zs = tuple(z_exponents) if self.num_z_vars else ()
        if len(zs) != self.num_z_vars:
            raise ParameterError(f"expected {self.num_z_vars} z exponents, got {zs}")
        return self._coeffs.get((zs, q_exponent), 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def min_coeff(self) -> int:
        return min(self._coeffs.values(), default=0)

    def lowest_q(self) -> int | None:
        return min((k for _, k in self._coeffs), default=None)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == TruncatedSeries.one(self.num_z_vars, self.trunc) * other
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.num_z_vars == other.num_z_vars and self.trunc == other.trunc
                and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_z_vars, self.trunc, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        head = ", ".join(f"{_fmt_key(k, self.num_z_vars)}:{c}" for k, c in self.items()[:6])
        more = "" if len(self) <= 6 else ", ..."
        return f"TruncatedSeries(z={self.num_z_vars}, trunc={self.trunc}, {{{head}{more}}})"

    def dump(self) -> str:
        """One ``z1^a z2^b q^k : c`` line per term (zero z-powers omitted)."""
        return "\n".join(f"{_fmt_key(k, self.num_z_vars)} : {c}" for k, c in self.items())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if self.num_z_vars != other.num_z_vars:
            raise ParameterError(
                f"series have {self.num_z_vars} and {other.num_z_vars} z variables"
            )

    def truncate(self, trunc: int) -> "TruncatedSeries":
        if trunc >= self.trunc:
            return self
        return TruncatedSeries._raw(
            {key: c for key, c in self._coeffs.items() if key[1] <= trunc},
            self.num_z_vars, trunc,
        )

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.one(self.num_z_vars, self.trunc) * other
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.trunc, other.trunc)
        acc = {key: c for key, c in self._coeffs.items() if key[1] <= n}
        for key, c in other._coeffs.items():
            if key[1] <= n:
                v = acc.get(key, 0) + c
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return TruncatedSeries._raw(acc, self.num_z_vars, n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw({k: -c for k, c in self._coeffs.items()}, self.num_z_vars, self.trunc)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TruncatedSeries.zero(self.num_z_vars, self.trunc)
            return TruncatedSeries._raw({k: c * other for k, c in self._coeffs.items()},
                                        self.num_z_vars, self.trunc)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.trunc, other.trunc)
        a = sorted(self._coeffs.items(), key=lambda kv: kv[0][1])
        b = sorted(other._coeffs.items(), key=lambda kv: kv[0][1])
        acc: dict[Key, int] = defaultdict(int)
        for (za, ka), ca in a:
            if ka > n:
                break
            room = n - ka
            for (zb, kb), cb in b:
                if kb > room:
                    break
                acc[(tuple(x + y for x, y in zip(za, zb)), ka + kb)] += ca * cb
        return TruncatedSeries._raw({k: c for k, c in acc.items() if c}, self.num_z_vars, n)

    __rmul__ = __mul__

    def shift(self, z_exponents: Sequence[int] | None, q_exponent: int) -> "TruncatedSeries":
        """Multiply by the monomial ``z^z_exponents q^q_exponent``."""
        zs = tuple(z_exponents) if z_exponents else (0,) * self.num_z_vars
        if len(zs) != self.num_z_vars:
            raise ParameterError(f"expected {self.num_z_vars} z exponents, got {zs}")
        acc = {}
        for (za, ka), c in self._coeffs.items():
            k = ka + q_exponent
            if k > self.trunc:
                continue
            zn = tuple(x + y for x, y in zip(za, zs))
            if k < 0 or any(e < 0 for e in zn):
                raise ParameterError(f"shift produces a negative exponent {(zn, k)}")
            acc[(zn, k)] = c
        return TruncatedSeries._raw(acc, self.num_z_vars, self.trunc)

    def div_one_minus(self, z_exponents: Sequence[int] | None, a: int) -> "TruncatedSeries":
        """Multiply by ``1 / (1 - z^z_exponents q^a)``; requires ``a >= 1``.

        Solves ``T = S + z^e q^a T`` term by term in increasing q-degree, which
        is linear in the output size instead of a full convolution.
        """
        if a < 1:
            raise ParameterError(f"geometric factor needs a positive q-exponent, got {a}")
        zs = tuple(z_exponents) if z_exponents else (0,) * self.num_z_vars
        rows: dict[int, dict[tuple[int, ...], int]] = defaultdict(lambda: defaultdict(int))
        for (za, k), c in self._coeffs.items():
            rows[k][za] += c
        out: dict[Key, int] = {}
        for k in range(self.trunc + 1):
            row = rows.pop(k, None)
            if not row:
                continue
            carry = rows[k + a] if k + a <= self.trunc else None
            for za, c in row.items():
                if c:
                    out[(za, k)] = c
                    if carry is not None:
                        carry[tuple(x + y for x, y in zip(za, zs))] += c
        return TruncatedSeries._raw(out, self.num_z_vars, self.trunc)

    def times_one_minus(self, z_exponents: Sequence[int] | None, a: int) -> "TruncatedSeries":
        """Multiply by ``1 - z^z_exponents q^a``."""
        return self - self.shift(z_exponents, a)

    def collapse_z(self) -> "TruncatedSeries":
        """Set every ``z_i`` equal to a single ``z``."""
        acc: dict[Key, int] = defaultdict(int)
        for (zs, k), c in self._coeffs.items():
            acc[((sum(zs),), k)] += c
        return TruncatedSeries(acc, 1, self.trunc)

    def select(self, predicate) -> "TruncatedSeries":
        """Keep the terms whose z-exponent vector satisfies ``predicate``."""
        return TruncatedSeries._raw(
            {key: c for key, c in self._coeffs.items() if predicate(key[0])},
            self.num_z_vars, self.trunc,
        )


def _fmt_key(key: Key, num_z_vars: int) -> str:
    zs, k = key
    bits = [f"z{i + 1}^{e}" for i, e in enumerate(zs) if e]
    bits.append(f"q^{k}")
    return " ".join(bits)


def _unit_z(index: int | None, num_z_vars: int, power: int = 1) -> tuple[int, ...]:
    zs = [0] * num_z_vars
    if index is not None:
        if not 0 <= index < num_z_vars:
            raise ParameterError(f"z index {index} out of range for {num_z_vars} variables")
        zs[index] = power
    return tuple(zs)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def coeff(s: TruncatedSeries, z_exponents: Sequence[int], q_exponent: int) -> int:
    return s.coeff(z_exponents, q_exponent)


def geometric_factor(z_index: int | None, a: int, N: int, num_z_vars: int | None = None) -> TruncatedSeries:
    """``1 / (1 - z_i q^a)`` (or ``1 / (1 - q^a)`` when ``z_index`` is None) up to ``q^N``.

    ``z_index`` is 0-based.  ``num_z_vars`` defaults to ``z_index + 1``.
    """
    if a < 1:
        raise ParameterError(f"geometric factor needs a positive q-exponent, got {a}")
    if num_z_vars is None:
        num_z_vars = 0 if z_index is None else z_index + 1
    zs = _unit_z(z_index, num_z_vars)
    terms = {(tuple(e * j for e in zs), a * j): 1 for j in range(N // a + 1)}
    return TruncatedSeries(terms, num_z_vars, N)


class Factor(NamedTuple):
    """``z^num_z q^num_q / (1 - z_var q^a)``; ``a = 0`` means no denominator.

    ``var`` is a 0-based z index or None for a pure q factor; ``num_z`` is a
    full exponent vector (empty tuple for none).
    """

    var: int | None
    a: int
    num_z: tuple[int, ...] = ()
    num_q: int = 0


def pochhammer_chain(factors: Iterable[Factor], N: int, num_z_vars: int = 1) -> TruncatedSeries:
    """Product of :class:`Factor` terms, truncated at ``q^N``."""
    s = TruncatedSeries.one(num_z_vars, N)
    num_z = [0] * num_z_vars
    num_q = 0
    dens = []
    for f in factors:
        if f.num_z:
            if len(f.num_z) != num_z_vars:
                raise ParameterError(f"numerator {f.num_z} needs {num_z_vars} entries")
            num_z = [x + y for x, y in zip(num_z, f.num_z)]
        num_q += f.num_q
        if f.a:
            dens.append((_unit_z(f.var, num_z_vars), f.a))
        elif f.var is not None:
            raise ParameterError("a z-only denominator would not be q-truncatable")
    s = s.shift(tuple(num_z), num_q)
    for zs, a in dens:
        if not s:
            break
        s = s.div_one_minus(zs, a)
    return s
