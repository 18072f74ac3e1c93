"""Brute-force homology through the Smith normal form over the integers.

This is the independent check on the closed formula: it knows nothing about
In/Out sets and only looks at the matrices of a :class:`GradedComplex`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import cell_counts
from .complex import Direction, GradedComplex, SparseMatrix
from .errors import InvalidComplex, ResourceLimit
from .modules import CoefficientRing, GradedModule, Piece

#: Largest number of cells in a single degree the oracle will accept.
ORACLE_LIMIT = 20_000


@dataclass(frozen=True)
class SnfResult:
    invariant_factors: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def smith_normal_form(matrix: Sequence[Sequence[int]] | SparseMatrix) -> SnfResult:
    """Invariant factors of an integer matrix.

    Each step moves the nonzero entry of least absolute value to the pivot,
    clears its row and column by integer division, and repeats until the
    pivot divides the whole remaining block. Entries are Python ints, so the
    arithmetic is exact at any size.
    """
    if isinstance(matrix, SparseMatrix):
        a = matrix.to_dense()
        rows, cols = matrix.nrows, matrix.ncols
    else:
        a = [[int(x) for x in row] for row in matrix]
        rows = len(a)
        cols = len(a[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        pivot = _min_entry(a, t, rows, cols)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            moved = _clear_column(a, t, rows) or _clear_row(a, t, cols)
            if moved:
                continue
            bad = _non_divisible(a, t, rows, cols)
            if bad is None:
                break
            # fold the offending row into the pivot row; the next pass shrinks the pivot
            src = a[bad]
            a[t] = [x + y for x, y in zip(a[t], src)]
        factors.append(abs(a[t][t]))
        t += 1
    return SnfResult(tuple(factors), (rows, cols))


def _min_entry(a, t, rows, cols):
    best = None
    best_val = 0
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = abs(row[j])
            if v and (best is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def _clear_column(a, t, rows) -> bool:
    """Reduce column ``t`` below the pivot; True if a smaller remainder became the pivot."""
    p = a[t][t]
    for i in range(t + 1, rows):
        v = a[i][t]
        if v == 0:
            continue
        q = v // p
        if q:
            a[i] = [x - q * y for x, y in zip(a[i], a[t])]
        if a[i][t]:
            a[t], a[i] = a[i], a[t]
            return True
    return False


def _clear_row(a, t, cols) -> bool:
    p = a[t][t]
    row_t = a[t]
    for j in range(t + 1, cols):
        v = row_t[j]
        if v == 0:
            continue
        q = v // p
        if q:
            for row in a:
                row[j] -= q * row[t]
        if row_t[j]:
            for row in a:
                row[t], row[j] = row[j], row[t]
            return True
    return False


def _non_divisible(a, t, rows, cols):
    p = a[t][t]
    for i in range(t + 1, rows):
        row = a[i]
        for j in range(t + 1, cols):
            if row[j] % p:
                return i
    return None


def check_oracle_scale(n: int, k: int, limit: int = ORACLE_LIMIT) -> None:
    """Refuse before building anything if some degree has too many cells."""
    largest = max(cell_counts(n, k))
    if largest > limit:
        raise ResourceLimit(
            f"Gr_{k}({n}) has {largest} cells in one degree; the SNF oracle "
            f"is limited to {limit}. Use the closed formula instead.")


def check_complex(c: GradedComplex) -> None:
    for m, composite in c.composites():
        if not composite.is_zero():
            i, j, v = next(e for e in composite.entries() if e[2])
            raise InvalidComplex(
                f"differentials through degree {m} compose to a nonzero map "
                f"(entry ({i}, {j}) = {v})")


def complex_snf(c: GradedComplex, limit: int = ORACLE_LIMIT) -> list[SnfResult]:
    """Validate ``c`` and return the Smith form of each differential."""
    largest = max(c.sizes())
    if largest > limit:
        raise ResourceLimit(f"{largest} cells in one degree exceeds the oracle limit {limit}")
    check_complex(c)
    return [smith_normal_form(m) for m in c.maps]


def homology_from_snf(c: GradedComplex, snfs: Sequence[SnfResult],
                      ring: CoefficientRing) -> GradedModule:
    """Homology of ``c (x) R`` from the integral invariant factors.

    A free complex over Z splits into pieces ``Z`` and ``Z --d--> Z``; after
    tensoring with R these contribute R, ker(d), and R/dR respectively.
    """
    cohomological = c.direction is Direction.COHOMOLOGICAL
    pieces = []
    for m, size in enumerate(c.sizes()):
        # snfs[i] belongs to the map joining degrees i and i+1
        below = snfs[m - 1] if m >= 1 else None
        above = snfs[m] if m < len(snfs) else None
        incoming, outgoing = (below, above) if cohomological else (above, below)
        piece = Piece(size - _rank(incoming) - _rank(outgoing))
        for d in incoming.invariant_factors if incoming else ():
            piece = piece + ring.quotient(d)
        for d in outgoing.invariant_factors if outgoing else ():
            piece = piece + ring.annihilator(d)
        pieces.append(piece)
    return GradedModule.from_pieces(ring, pieces)


def _rank(snf: SnfResult | None) -> int:
    return snf.rank if snf else 0


def homology_integral(c: GradedComplex) -> GradedModule:
    return homology_with_coefficients(c, CoefficientRing.integers())


def homology_with_coefficients(c: GradedComplex, ring: CoefficientRing) -> GradedModule:
    return homology_from_snf(c, complex_snf(c), ring)


def homology_many(c: GradedComplex, rings: Iterable[CoefficientRing]
                  ) -> dict[CoefficientRing, GradedModule]:
    """Several coefficient rings from a single round of Smith forms."""
    snfs = complex_snf(c)
    return {ring: homology_from_snf(c, snfs, ring) for ring in rings}
