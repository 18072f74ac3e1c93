"""Schubert cell indices for the real Grassmannian Gr_k(n).

A cell is indexed by a k-subset ``S = {s_1 < ... < s_k}`` of ``{1, ..., n}``.
Subsets are ordered as a poset by ``S <= T  iff  s_i <= t_i`` for all ``i``;
the cell dimension is ``sum(s_i - i)``.

Throughout, the sentinels ``s_0 = 0`` and ``s_{k+1} = n + 1`` are used.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidArgument, UnsupportedSize

MAX_N = 64


def check_size(n: int, k: int) -> None:
    """Validate ``0 <= k <= n <= MAX_N``."""
    if n > MAX_N:
        raise UnsupportedSize(f"n={n} exceeds the supported maximum {MAX_N}")
    if n < 0 or k < 0 or k > n:
        raise InvalidArgument(f"need 0 <= k <= n, got n={n}, k={k}")


@dataclass(frozen=True)
class SchubertSet:
    """A k-subset of ``{1..n}`` stored as a sorted tuple."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if self.n > MAX_N:
            raise UnsupportedSize(f"n={self.n} exceeds the supported maximum {MAX_N}")
        if self.n < 0 or len(elems) > self.n:
            raise InvalidArgument(f"invalid subset {elems} of 1..{self.n}")
        prev = 0
        for s in elems:
            if not prev < s <= self.n:
                raise InvalidArgument(
                    f"elements must be strictly increasing in [1, {self.n}], got {elems}")
            prev = s

    @classmethod
    def of(cls, n: int, *elements: int) -> "SchubertSet":
        return cls(n, tuple(sorted(elements)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SchubertSet":
        return cls(n, tuple(i + 1 for i in range(n) if mask >> i & 1))

    @property
    def k(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> int:
        m = 0
        for s in self.elements:
            m |= 1 << (s - 1)
        return m

    def padded(self) -> tuple[int, ...]:
        """Elements with the sentinels ``0`` and ``n+1`` on either side."""
        return (0, *self.elements, self.n + 1)

    def bump(self, r: int) -> "SchubertSet | None":
        """Return ``S_r`` (entry ``r`` raised by one), or None if that is not a subset."""
        if not 1 <= r <= self.k:
            raise InvalidArgument(f"r={r} outside [1, {self.k}]")
        p = self.padded()
        if p[r + 1] - p[r] <= 1:
            return None
        e = list(self.elements)
        e[r - 1] += 1
        return SchubertSet(self.n, tuple(e))

    def label(self) -> str:
        """Hyphen-joined elements, e.g. ``"1-2-4"``; ``"empty"`` when k = 0."""
        return "-".join(map(str, self.elements)) or "empty"

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def _same_shape(S: SchubertSet, T: SchubertSet) -> None:
    if S.n != T.n or S.k != T.k:
        raise InvalidArgument(f"mismatched shapes (n={S.n}, k={S.k}) vs (n={T.n}, k={T.k})")


def iter_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield raw sorted tuples in lexicographic order (no object overhead)."""
    check_size(n, k)
    return itertools.combinations(range(1, n + 1), k)


def enumerate_subsets(n: int, k: int) -> list[SchubertSet]:
    """All k-subsets of ``{1..n}`` in lexicographic order.

    This order is the basis order used by every matrix in the package.
    """
    return [SchubertSet(n, t) for t in iter_subsets(n, k)]


def leq(S: SchubertSet, T: SchubertSet) -> bool:
    _same_shape(S, T)
    return all(s <= t for s, t in zip(S.elements, T.elements))


def dim(S: SchubertSet) -> int:
    return sum(s - i for i, s in enumerate(S.elements, 1))


def partial_dim(S: SchubertSet, r: int) -> int:
    """``sum_{max(r,1) <= i <= k} (s_i - i)``; ``r = 0`` agrees with ``r = 1``."""
    if not 0 <= r <= S.k:
        raise InvalidArgument(f"r={r} outside [0, {S.k}]")
    return sum(s - i for i, s in enumerate(S.elements, 1) if i >= r)


def z_index_set(S: SchubertSet) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``i <= j < s_i``.

    Sorted so that ``(i, j)`` precedes ``(i', j')`` when ``i < i'``, or when
    ``i == i'`` and ``j > j'``.
    """
    return [(i, j) for i, s in enumerate(S.elements, 1) for j in range(s - 1, i - 1, -1)]


@lru_cache(maxsize=None)
def _partition_table(n: int, k: int) -> tuple[int, ...]:
    # Coefficients of the Gaussian binomial [n choose k]_q, via
    # [a, b]_q = [a-1, b-1]_q + q^b [a-1, b]_q.
    rows = {0: [1]}  # rows[b] holds [a, b]_q for the current a
    for a in range(1, n + 1):
        new = {}
        for b in range(0, min(a, k) + 1):
            left = rows.get(b - 1, []) if b >= 1 else []
            right = rows.get(b, []) if b <= a - 1 else []
            size = max(len(left), len(right) + b if right else 0)
            poly = [0] * size
            for i, c in enumerate(left):
                poly[i] += c
            for i, c in enumerate(right):
                poly[i + b] += c
            new[b] = poly
        rows = new
    return tuple(rows[k])


def cell_count(n: int, k: int, m: int) -> int:
    """Number of partitions of ``m`` into at most ``k`` parts, each at most ``n-k``."""
    check_size(n, k)
    if not 0 <= m <= k * (n - k):
        raise InvalidArgument(f"degree {m} outside [0, {k * (n - k)}]")
    return _partition_table(n, k)[m]


def cell_counts(n: int, k: int) -> list[int]:
    check_size(n, k)
    return list(_partition_table(n, k))


class CellKind(enum.Enum):
    FREE = "free"
    KERNEL = "kernel"
    COKERNEL = "cokernel"


@dataclass(frozen=True)
class CellClassification:
    in_set: frozenset[int]
    out_set: frozenset[int]
    kind: CellKind = field(init=False)

    def __post_init__(self):
        marked = self.in_set | self.out_set
        if not marked:
            kind = CellKind.FREE
        elif min(marked) in self.out_set:
            kind = CellKind.KERNEL
        else:
            kind = CellKind.COKERNEL
        object.__setattr__(self, "kind", kind)


def in_set(S: SchubertSet) -> frozenset[int]:
    """Indices whose entry can be lowered along a nonzero (±2) differential."""
    p, k = S.padded(), S.k
    return frozenset(i for i in range(1, k + 1)
                     if (p[i] - k) % 2 == 0 and p[i - 1] < p[i] - 1)


def out_set(S: SchubertSet) -> frozenset[int]:
    """Indices whose entry can be raised along a nonzero (±2) differential."""
    p, k = S.padded(), S.k
    return frozenset(i for i in range(1, k + 1)
                     if (p[i] - k) % 2 == 1 and p[i] + 1 < p[i + 1])


def classify(S: SchubertSet) -> CellClassification:
    return CellClassification(in_set(S), out_set(S))


def admissible_leq(S: SchubertSet, T: SchubertSet) -> bool:
    """Relation generated by the covers that carry a nonzero coefficient."""
    _same_shape(S, T)
    moved = out_set(S) & in_set(T)
    return all(t - s == (1 if i in moved else 0)
               for i, (s, t) in enumerate(zip(S.elements, T.elements), 1))


def classify_array(block: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised classification of many subsets at once.

    ``block`` has shape ``(rows, k)`` with sorted entries. Returns the cell
    dimensions and an int8 array coding the kind (0 free, 1 kernel, 2 cokernel).
    """
    rows, k = block.shape
    s = block.astype(np.int16, copy=False)
    idx = np.arange(1, k + 1, dtype=np.int16)
    dims = (s - idx).sum(axis=1, dtype=np.int64)
    if k == 0:
        return dims, np.zeros(rows, dtype=np.int8)
    prev = np.empty_like(s)
    prev[:, 0] = 0
    prev[:, 1:] = s[:, :-1]
    nxt = np.empty_like(s)
    nxt[:, -1] = n + 1
    nxt[:, :-1] = s[:, 1:]
    even = (s - k) % 2 == 0
    ins = even & (prev < s - 1)
    outs = ~even & (s + 1 < nxt)
    marked = ins | outs
    any_marked = marked.any(axis=1)
    first = marked.argmax(axis=1)
    first_is_out = outs[np.arange(rows), first]
    kinds = np.where(~any_marked, 0, np.where(first_is_out, 1, 2)).astype(np.int8)
    return dims, kinds


def iter_subset_blocks(n: int, k: int, chunk: int = 1 << 18) -> Iterator[np.ndarray]:
    """Lexicographic subsets as ``(rows, k)`` int8 arrays of bounded size."""
    it = iter_subsets(n, k)
    if k == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    while True:
        flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, chunk)),
                           dtype=np.int8)
        if flat.size == 0:
            return
        yield flat.reshape(-1, k)


def subsets_of(indices: Iterable[int]) -> Iterator[frozenset[int]]:
    items = sorted(indices)
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)
