"""Independent reference computations used by the test-suite.

Nothing here imports the package's counting code.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations
from math import factorial, prod


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def brute_partitions(n: int) -> set[tuple[int, ...]]:
    """All partitions of n as non-increasing tuples, by naive recursion."""
    if n == 0:
        return {()}
    out = set()
    for first in range(1, n + 1):
        for rest in brute_partitions(n - first):
            out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def cycle_type(perm) -> tuple[int, ...]:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def burnside_fixed_order(d: int, n: int) -> int:
    """Orbits of S_n x S_n on S_n^d via (gamma, rho): sigma -> gamma sigma rho,
    counted by averaging fixed points over all group pairs."""
    perms = list(permutations(range(n)))
    total = 0
    for g in perms:
        for r in perms:
            fixed = sum(1 for s in perms if all(g[s[r[k]]] == s[k] for k in range(n)))
            total += fixed**d
    q, rem = divmod(total, factorial(n) ** 2)
    assert rem == 0
    return q


def random_compatible_pairs(rng: random.Random, d: int, max_white: int = 4):
    """Random (white, black) cardinality dicts over colors 1..d sharing
    per-color multiplicities. Returns lists of (colors tuple, count)."""
    while True:
        white: dict[tuple[int, ...], int] = {}
        for _ in range(rng.randint(1, max_white)):
            k = rng.randint(1, d)
            t = tuple(sorted(rng.sample(range(1, d + 1), k)))
            white[t] = white.get(t, 0) + 1
        mult = {c: sum(n for t, n in white.items() if c in t) for c in range(1, d + 1)}
        if min(mult.values()) == 0:
            continue
        rem = dict(mult)
        black: dict[tuple[int, ...], int] = {}
        while any(rem.values()):
            live = [c for c, m in rem.items() if m > 0]
            k = rng.randint(1, len(live))
            t = tuple(sorted(rng.sample(live, k)))
            black[t] = black.get(t, 0) + 1
            for c in t:
                rem[c] -= 1
        return sorted(white.items()), sorted(black.items()), mult


def sigma_space(mult: dict[int, int]) -> int:
    return prod(factorial(m) for m in mult.values())
