"""Independent brute-force oracles shared by the test modules.

Nothing here imports the package's enumeration code.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement


@lru_cache(maxsize=None)
def euler_partition_count(n: int) -> int:
    # pentagonal number recurrence
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * euler_partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * euler_partition_count(n - g2)
        k += 1
    return total


def all_partitions(n: int) -> list[tuple[int, ...]]:
    """Every partition of n via multisets of parts; slow but obviously right."""
    out = []
    for length in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), length):
            if sum(combo) == n:
                out.append(tuple(sorted(combo, reverse=True)))
    return out if n else [()]


def alt_type(parts, m: int) -> tuple[int, ...]:
    padded = list(parts) + [0] * (-len(parts) % m)
    return tuple(
        sum(padded[b + i - 1] - padded[b + i] for b in range(0, len(padded), m))
        for i in range(1, m)
    )


def len_type(parts, m: int) -> tuple[int, ...]:
    return tuple(sum(1 for x in parts if x % m == r) for r in range(1, m))


def max_rep(parts) -> int:
    return max((parts.count(x) for x in set(parts)), default=0)
