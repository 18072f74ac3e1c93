"""The Schubert cellular (co)chain complex of Gr_k(n) over the integers.

The cochain differential sends a cell ``S`` to ``sum_r c(S, r) * S_r`` where
``S_r`` raises the r-th entry by one and

    c(S, r) = (-1)^{d_r(S)} * 2   if s_{r+1} - s_r > 1 and k - s_r is odd,
              0                   otherwise.

The chain differential is the transpose.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .combinatorics import (
    SchubertSet,
    check_size,
    dim,
    enumerate_subsets,
    partial_dim,
)
from .errors import InvalidArgument, InvalidCover


class Direction(enum.Enum):
    HOMOLOGICAL = "homological"
    COHOMOLOGICAL = "cohomological"


def sigma_signs(S: SchubertSet, T: SchubertSet) -> tuple[int, int]:
    """Signs of the two link points ``0`` and ``pi`` for the cover ``S < T``."""
    if S.n != T.n or S.k != T.k:
        raise InvalidCover(f"{T} is not a cover of {S}: shapes differ")
    diff = [i for i, (s, t) in enumerate(zip(S.elements, T.elements), 1) if s != t]
    if len(diff) != 1:
        raise InvalidCover(f"{T} is not of the form S_r for S={S}")
    i = diff[0]
    if T.elements[i - 1] != S.elements[i - 1] + 1:
        raise InvalidCover(f"{T} is not of the form S_r for S={S}")
    k = S.k
    tail = partial_dim(S, i + 1) if i < k else 0
    sigma_zero = -1 if (1 + k + i + tail) % 2 else 1
    sigma_pi = -1 if partial_dim(S, i) % 2 else 1
    return sigma_zero, sigma_pi


def diff_coefficient(S: SchubertSet, r: int) -> int:
    if not 1 <= r <= S.k:
        raise InvalidArgument(f"r={r} outside [1, {S.k}]")
    p = S.padded()
    if p[r + 1] - p[r] <= 1 or (S.k - p[r]) % 2 == 0:
        return 0
    return -2 if partial_dim(S, r) % 2 else 2


@dataclass(frozen=True)
class CoverCoefficient:
    source: SchubertSet
    r: int
    target: SchubertSet
    value: int


def boundary(S: SchubertSet) -> list[CoverCoefficient]:
    """Nonzero terms of the cochain differential applied to ``S``."""
    out = []
    for r in range(1, S.k + 1):
        c = diff_coefficient(S, r)
        if c:
            out.append(CoverCoefficient(S, r, S.bump(r), c))
    return out


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse integer matrix; ``columns[j]`` lists ``(row, value)``."""

    nrows: int
    ncols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col:
                dense[i][j] += v
        return dense

    def transpose(self) -> "SparseMatrix":
        cols: list[list[tuple[int, int]]] = [[] for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col:
                cols[i].append((j, v))
        return SparseMatrix(self.ncols, self.nrows, tuple(tuple(c) for c in cols))

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for j, col in enumerate(self.columns):
            for i, v in col:
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self) -> bool:
        return all(v == 0 for _, _, v in self.entries())


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    if a.ncols != b.nrows:
        raise InvalidArgument(f"shape mismatch {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    a_cols = a.columns
    cols = []
    for col in b.columns:
        acc: dict[int, int] = {}
        for mid, v in col:
            for i, w in a_cols[mid]:
                acc[i] = acc.get(i, 0) + v * w
        cols.append(tuple(sorted((i, v) for i, v in acc.items() if v)))
    return SparseMatrix(a.nrows, b.ncols, tuple(cols))


@dataclass(frozen=True)
class GradedComplex:
    """Bases per degree plus the differentials between adjacent degrees.

    ``maps[i]`` always joins degrees ``i`` and ``i+1``. Homologically it is
    ``C_{i+1} -> C_i`` (shape ``|B_i| x |B_{i+1}|``); cohomologically it is
    ``C^i -> C^{i+1}`` (shape ``|B_{i+1}| x |B_i|``).
    """

    n: int
    k: int
    direction: Direction
    bases: tuple[tuple[SchubertSet, ...], ...]
    maps: tuple[SparseMatrix, ...]

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def sizes(self) -> list[int]:
        return [len(b) for b in self.bases]

    def incoming(self, m: int) -> SparseMatrix | None:
        """The differential whose image lies in degree ``m``."""
        if self.direction is Direction.HOMOLOGICAL:
            return self.maps[m] if m < len(self.maps) else None
        return self.maps[m - 1] if m >= 1 else None

    def outgoing(self, m: int) -> SparseMatrix | None:
        if self.direction is Direction.HOMOLOGICAL:
            return self.maps[m - 1] if m >= 1 else None
        return self.maps[m] if m < len(self.maps) else None

    def composites(self) -> Iterator[tuple[int, SparseMatrix]]:
        """Yield ``(m, composite)`` for each pair of differentials meeting at degree ``m``."""
        for m in range(len(self.maps) - 1):
            lo, hi = self.maps[m], self.maps[m + 1]
            if self.direction is Direction.HOMOLOGICAL:
                yield m + 1, matmul(lo, hi)
            else:
                yield m + 1, matmul(hi, lo)

    def transposed(self) -> "GradedComplex":
        other = (Direction.COHOMOLOGICAL if self.direction is Direction.HOMOLOGICAL
                 else Direction.HOMOLOGICAL)
        return GradedComplex(self.n, self.k, other, self.bases,
                             tuple(m.transpose() for m in self.maps))


def build_complex(n: int, k: int, direction: Direction | str = Direction.COHOMOLOGICAL
                  ) -> GradedComplex:
    check_size(n, k)
    direction = Direction(direction)
    top = k * (n - k)
    by_degree: list[list[SchubertSet]] = [[] for _ in range(top + 1)]
    for S in enumerate_subsets(n, k):
        by_degree[dim(S)].append(S)
    position = {S: idx for cells in by_degree for idx, S in enumerate(cells)}
    maps = []
    for m in range(top):
        # cochain map degree m -> m+1, one column per source cell
        cols = []
        for S in by_degree[m]:
            cols.append(tuple(sorted((position[c.target], c.value) for c in boundary(S))))
        delta = SparseMatrix(len(by_degree[m + 1]), len(by_degree[m]), tuple(cols))
        maps.append(delta if direction is Direction.COHOMOLOGICAL else delta.transpose())
    return GradedComplex(n, k, direction, tuple(tuple(b) for b in by_degree), tuple(maps))


def euler_characteristic(c: GradedComplex) -> int:
    return sum((-1) ** m * size for m, size in enumerate(c.sizes()))
