"""Partitions, constrained enumeration and the residue-class classifiers.

A partition is stored as a tuple of weakly decreasing positive parts.  The
classifiers here work for an arbitrary modulus ``m >= 2``:

* :func:`alt_sum_type` groups the zero padded partition into blocks of
  ``m`` consecutive parts and sums the consecutive differences position by
  position, giving a vector of ``m - 1`` nonnegative integers;
* :func:`length_type` counts the parts in each nonzero residue class.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import DomainError, ParameterError

__all__ = [
    "Partition",
    "Constraint",
    "BasicUnit",
    "Case",
    "check_modulus",
    "enumerate_partitions",
    "partitions_up_to",
    "conjugate",
    "alt_sum_type",
    "length_type",
    "basic_units",
    "case_classify",
    "unit_distance",
    "max_multiplicity",
    "is_pure",
    "is_mixed",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()
    weight: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ParameterError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ParameterError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"7+4+3"``; zero parts (as in ``"4+4+3+3+0+0"``) are dropped."""
        text = text.strip()
        if text in ("", "0", "()"):
            return cls(())
        values = [int(tok) for tok in text.split("+")]
        return cls(tuple(v for v in values if v != 0))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "0"


def check_modulus(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ParameterError(f"modulus must be an integer >= 2, got {m!r}")
    return m


# --------------------------------------------------------------------------
# constrained enumeration

_KINDS = (
    "all",
    "max_repeat",
    "no_multiples",
    "gap2",
    "gap2_no_ones",
    "andrews_gordon",
)


@dataclass(frozen=True)
class Constraint:
    """Membership rule for :func:`enumerate_partitions`.

    Use the classmethod constructors rather than building one directly.
    """

    kind: str = "all"
    bound: int = 0
    d: int = 0
    i: int = 0
    interpretation: str = "standard"

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "max_repeat" and self.bound < 1:
            raise ParameterError("max_repeat bound must be >= 1")
        if self.kind == "no_multiples" and self.bound < 2:
            raise ParameterError("no_multiples modulus must be >= 2")
        if self.kind == "andrews_gordon":
            if self.d < 1:
                raise ParameterError(f"d must be >= 1, got {self.d}")
            if not 1 <= self.i <= 2 * self.d:
                raise ParameterError(f"i must lie in 1..{2 * self.d}, got {self.i}")
            if self.interpretation not in ("standard", "literal"):
                raise ParameterError(
                    f"interpretation must be 'standard' or 'literal', got {self.interpretation!r}"
                )

    @classmethod
    def all(cls) -> "Constraint":
        return cls("all")

    @classmethod
    def max_repeat(cls, r: int) -> "Constraint":
        """Each part value occurs at most ``r`` times (the set P uses ``r = m - 1``)."""
        return cls("max_repeat", bound=r)

    @classmethod
    def no_parts_divisible_by(cls, m: int) -> "Constraint":
        """No part is a multiple of ``m`` (the set Q)."""
        return cls("no_multiples", bound=m)

    @classmethod
    def gap_at_least_2(cls) -> "Constraint":
        return cls("gap2")

    @classmethod
    def gap_at_least_2_no_ones(cls) -> "Constraint":
        return cls("gap2_no_ones")

    @classmethod
    def andrews_gordon(cls, d: int, i: int, interpretation: str = "standard") -> "Constraint":
        """Generalised gap condition with at most ``i - 1`` parts equal to 1.

        ``standard``: ``parts[j] - parts[j + d - 1] >= 2`` wherever both exist.
        ``literal``: at most ``d - 1`` adjacent pairs of parts differ by exactly 1.
        """
        return cls("andrews_gordon", d=d, i=i, interpretation=interpretation)

    def admits(self, p: Partition | Sequence[int]) -> bool:
        """Direct membership test, independent of the enumeration code path."""
        parts = tuple(p)
        kind = self.kind
        if kind == "all":
            return True
        if kind == "max_repeat":
            return max_multiplicity(parts) <= self.bound
        if kind == "no_multiples":
            return all(x % self.bound for x in parts)
        if kind in ("gap2", "gap2_no_ones"):
            if kind == "gap2_no_ones" and 1 in parts:
                return False
            return all(a - b >= 2 for a, b in zip(parts, parts[1:]))
        if parts.count(1) > self.i - 1:
            return False
        if self.interpretation == "standard":
            w = self.d - 1
            return all(parts[j] - parts[j + w] >= 2 for j in range(len(parts) - w))
        steps = sum(1 for a, b in zip(parts, parts[1:]) if a - b == 1)
        return steps <= self.d - 1


def enumerate_partitions(n: int, constraint: Constraint | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` admitted by ``constraint`` exactly once.

    Partitions come out in lexicographically decreasing order of their parts,
    so ``(n)`` is first and ``(1, ..., 1)`` last.  ``n = 0`` yields the empty
    partition (if the constraint admits it).
    """
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be a nonnegative integer, got {n!r}")
    c = constraint or Constraint.all()
    for parts in _generate(n, c):
        yield Partition(parts)


def partitions_up_to(max_weight: int, constraint: Constraint | None = None) -> Iterator[Partition]:
    """All admitted partitions of weight ``0..max_weight``, grouped by weight."""
    for n in range(max_weight + 1):
        yield from enumerate_partitions(n, constraint)


def _generate(n: int, c: Constraint) -> Iterator[tuple[int, ...]]:
    kind = c.kind
    if kind == "andrews_gordon" and c.d == 1:
        # parts[j] - parts[j] >= 2 is never satisfied, so only the empty partition
        if n == 0:
            yield ()
        return

    prefix: list[int] = []

    def rec(rem: int, top: int, run: int, ones: int, steps: int):
        if rem == 0:
            yield tuple(prefix)
            return
        hi = min(rem, top)
        if kind in ("gap2", "gap2_no_ones"):
            lo = 2 if kind == "gap2_no_ones" else 1
        else:
            lo = 1
        if kind == "andrews_gordon" and c.interpretation == "standard":
            w = c.d - 1
            if len(prefix) >= w:
                hi = min(hi, prefix[-w] - 2)
        for x in range(hi, lo - 1, -1):
            same = bool(prefix) and x == prefix[-1]
            new_run = run + 1 if same else 1
            new_ones = ones + (x == 1)
            new_steps = steps
            if kind == "max_repeat":
                if new_run > c.bound:
                    continue
            elif kind == "no_multiples":
                if x % c.bound == 0:
                    continue
            elif kind == "andrews_gordon":
                if new_ones > c.i - 1:
                    continue
                if c.interpretation == "literal":
                    if prefix and prefix[-1] - x == 1:
                        new_steps += 1
                    if new_steps > c.d - 1:
                        continue
            prefix.append(x)
            nxt = x - 2 if kind in ("gap2", "gap2_no_ones") else x
            yield from rec(rem - x, nxt, new_run, new_ones, new_steps)
            prefix.pop()

    yield from rec(n, n, 0, 0, 0)


# --------------------------------------------------------------------------
# classifiers


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def _padded(parts: Sequence[int], m: int) -> list[int]:
    padded = list(parts)
    padded.extend([0] * (-len(padded) % m))
    return padded


def alt_sum_type(p: Partition | Sequence[int], m: int) -> tuple[int, ...]:
    """Alternating sum type: ``sigma[i-1] = sum over blocks of (block[i-1] - block[i])``."""
    check_modulus(m)
    padded = _padded(tuple(p), m)
    sigma = [0] * (m - 1)
    for start in range(0, len(padded), m):
        for i in range(m - 1):
            sigma[i] += padded[start + i] - padded[start + i + 1]
    return tuple(sigma)


def length_type(p: Partition | Sequence[int], m: int) -> tuple[int, ...]:
    check_modulus(m)
    counts = [0] * (m - 1)
    for x in p:
        r = x % m
        if r == 0:
            raise DomainError(f"part {x} is divisible by the modulus {m}")
        counts[r - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class BasicUnit:
    """One block of ``m`` consecutive parts of the zero padded partition.

    ``special_kind`` is ``"gap1"`` or ``"gap2"`` when the second and third
    entries differ by exactly 1 or 2, and ``"none"`` otherwise (always
    ``"none"`` for ``m = 2``).
    """

    parts: tuple[int, ...]
    special_kind: str = "none"

    @property
    def is_special(self) -> bool:
        return self.special_kind != "none"


def basic_units(p: Partition | Sequence[int], m: int) -> list[BasicUnit]:
    check_modulus(m)
    padded = _padded(tuple(p), m)
    units = []
    for start in range(0, len(padded), m):
        block = tuple(padded[start:start + m])
        kind = "none"
        if m >= 3:
            kind = {1: "gap1", 2: "gap2"}.get(block[1] - block[2], "none")
        units.append(BasicUnit(block, kind))
    return units


class Case(enum.Enum):
    A = "A"
    B = "B"
    NEITHER = "neither"


def max_multiplicity(p: Partition | Sequence[int]) -> int:
    counts = Counter(p)
    return max(counts.values()) if counts else 0


def case_classify(p: Partition) -> Case:
    """Split modulus-3 partitions of type ``(s, 2)`` by their special units.

    Case A has two gap1 units, Case B a single gap2 unit.  Raises
    :class:`DomainError` unless the partition has type ``(s, 2)`` and no part
    repeated three times.
    """
    sigma = alt_sum_type(p, 3)
    if sigma[1] != 2 or max_multiplicity(p) > 2:
        raise DomainError(
            f"{p} has type {sigma} and multiplicity {max_multiplicity(p)}; "
            "need type (s, 2) with parts repeated at most twice"
        )
    kinds = Counter(u.special_kind for u in basic_units(p, 3))
    if kinds["gap1"] == 2 and kinds["gap2"] == 0:
        return Case.A
    if kinds["gap2"] == 1 and kinds["gap1"] == 0:
        return Case.B
    return Case.NEITHER


def unit_distance(p: Partition) -> int:
    """Number of basic units strictly between the two gap1 units of a Case A partition."""
    if case_classify(p) is not Case.A:
        raise DomainError(f"{p} is not a Case A partition")
    idx = [k for k, u in enumerate(basic_units(p, 3)) if u.special_kind == "gap1"]
    return idx[1] - idx[0] - 1


def is_pure(sigma: Sequence[int]) -> bool:
    return sum(1 for s in sigma if s) == 1


def is_mixed(sigma: Sequence[int]) -> bool:
    return sum(1 for s in sigma if s) > 1
