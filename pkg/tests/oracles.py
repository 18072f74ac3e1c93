"""Slow but obviously-correct reference computations used only by the tests."""

from __future__ import annotations

import itertools
from collections import Counter
from math import gcd

from realgrass.combinatorics import SchubertSet, dim, enumerate_subsets
from realgrass.complex import diff_coefficient


def bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i]), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def determinantal_invariant_factors(m: list[list[int]]) -> list[int]:
    """Invariant factors as ratios of gcds of all j x j minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors = [1]
    for j in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), j):
            for cs in itertools.combinations(range(cols), j):
                g = gcd(g, bareiss_det([[m[r][c] for c in cs] for r in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


def cells_by_degree(n: int, k: int) -> list[int]:
    counts = Counter(dim(S) for S in enumerate_subsets(n, k))
    return [counts[m] for m in range(k * (n - k) + 1)]


def partitions_in_box(m: int, parts: int, largest: int) -> int:
    """Count partitions of m into at most `parts` parts each <= `largest` by listing them."""
    return sum(1 for p in itertools.combinations_with_replacement(range(largest + 1), parts)
               if sum(p) == m)


def nonzero_covers(S: SchubertSet) -> list[SchubertSet]:
    return [S.bump(r) for r in range(1, S.k + 1) if diff_coefficient(S, r)]


def admissible_closure(n: int, k: int) -> set[tuple[SchubertSet, SchubertSet]]:
    """Reflexive-transitive closure of the covers that carry a nonzero coefficient."""
    cells = enumerate_subsets(n, k)
    reach = {}
    for S in sorted(cells, key=dim, reverse=True):
        up = {S}
        for T in nonzero_covers(S):
            up |= reach[T]
        reach[S] = up
    return {(S, T) for S in cells for T in reach[S]}
