"""Splitting the Schubert complex into tensor powers of ``Cone(Z --2--> Z)``.

Each cell S with ``Out(S) = {}`` heads one summand. Its members are the cells
reachable by admissible steps downward, one for every subset of ``In(S)``,
and the summand is ``Cone(Z --2--> Z)^{(x) |In(S)|}`` shifted to start in
degree ``d(S) - |In(S)|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .combinatorics import (
    SchubertSet,
    check_size,
    dim,
    enumerate_subsets,
    in_set,
    out_set,
    subsets_of,
)
from .complex import Direction, GradedComplex
from .errors import DecompositionMismatch, InvalidArgument
from .modules import CoefficientRing, GradedModule, Piece
from .oracle import complex_snf, homology_from_snf

DEFAULT_RINGS = (
    CoefficientRing.integers(),
    CoefficientRing.rationals(),
    CoefficientRing.mod(2),
    CoefficientRing.mod(3),
    CoefficientRing.mod(4),
)


def out_representative(T: SchubertSet) -> SchubertSet:
    """Raise every entry of ``T`` indexed by ``Out(T)``; the result has empty Out-set."""
    outs = out_set(T)
    return SchubertSet(T.n, tuple(t + 1 if i in outs else t
                                  for i, t in enumerate(T.elements, 1)))


def admissible_down_set(S: SchubertSet) -> list[SchubertSet]:
    """Cells ``T`` with ``T <=adm S``, one per subset of ``In(S)``.

    Ordered by the subset of ``In(S)`` that was lowered (by size, then
    lexicographically), so the first entry is ``S`` itself.
    """
    if out_set(S):
        raise InvalidArgument(f"{S} has nonempty Out-set {sorted(out_set(S))}")
    members = []
    for lowered in subsets_of(in_set(S)):
        members.append(SchubertSet(S.n, tuple(s - 1 if i in lowered else s
                                              for i, s in enumerate(S.elements, 1))))
    return members


@dataclass(frozen=True)
class ConeSummand:
    representative: SchubertSet
    in_size: int
    shift: int
    member_cells: tuple[SchubertSet, ...]

    @property
    def is_free(self) -> bool:
        return self.in_size == 0


def cone_decomposition(n: int, k: int) -> list[ConeSummand]:
    check_size(n, k)
    summands = []
    for S in enumerate_subsets(n, k):
        if out_set(S):
            continue
        r = len(in_set(S))
        summands.append(ConeSummand(S, r, dim(S) - r, tuple(admissible_down_set(S))))
    return summands


def cone_power_multiplicities(r: int) -> list[tuple[int, int]]:
    """``Cone^{(x) r}`` is a sum of ``C(r-1, a)`` copies of ``Cone[a]``, ``0 <= a < r``."""
    if r < 1:
        raise InvalidArgument(f"r must be positive, got {r}")
    return [(a, comb(r - 1, a)) for a in range(r)]


def model_homology(summands: Sequence[ConeSummand], top: int, ring: CoefficientRing,
                   direction: Direction = Direction.COHOMOLOGICAL) -> GradedModule:
    """Homology of the direct sum of shifted cones, computed without any matrices."""
    pieces = [Piece() for _ in range(top + 1)]
    ker, coker = ring.kernel_of_two(), ring.cokernel_of_two()
    # cohomologically the cone's lower generator carries the kernel
    low, high = (ker, coker) if direction is Direction.COHOMOLOGICAL else (coker, ker)
    for s in summands:
        if s.is_free:
            pieces[dim(s.representative)] += Piece(1)
            continue
        for a, mult in cone_power_multiplicities(s.in_size):
            pieces[s.shift + a] += low.scaled(mult)
            pieces[s.shift + a + 1] += high.scaled(mult)
    return GradedModule.from_pieces(ring, pieces)


@dataclass
class DecompositionReport:
    n: int
    k: int
    summands: int
    free_summands: int
    generator_tally: list[int]
    rings_checked: list[str] = field(default_factory=list)
    passed: bool = True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "passed": self.passed,
            "summands": self.summands,
            "free_summands": self.free_summands,
            "generator_tally": self.generator_tally,
            "rings_checked": self.rings_checked,
        }


def verify_decomposition(c: GradedComplex,
                         rings: Iterable[CoefficientRing] = DEFAULT_RINGS
                         ) -> DecompositionReport:
    """Check that the cone summands really split ``c``; raise on the first failure."""
    summands = cone_decomposition(c.n, c.k)
    owner: dict[SchubertSet, int] = {}
    for idx, s in enumerate(summands):
        for T in s.member_cells:
            if T in owner:
                raise DecompositionMismatch(
                    f"{T} lies in the summands of {summands[owner[T]].representative} "
                    f"and {s.representative}", (T, s.representative))
            owner[T] = idx
    for cells in c.bases:
        for T in cells:
            if T not in owner:
                raise DecompositionMismatch(f"{T} is not covered by any summand", (T,))
    if len(owner) != sum(c.sizes()):
        raise DecompositionMismatch("summands contain cells outside the complex")

    for m, matrix in enumerate(c.maps):
        lo, hi = c.bases[m], c.bases[m + 1]
        for i, j, v in matrix.entries():
            if not v:
                continue
            if c.direction is Direction.COHOMOLOGICAL:
                src, dst = lo[j], hi[i]
            else:
                src, dst = lo[i], hi[j]
            if owner[src] != owner[dst]:
                raise DecompositionMismatch(
                    f"coefficient {v} joins {src} and {dst} across summands", (src, dst))

    tally = [0] * len(c.bases)
    for s in summands:
        if s.is_free:
            tally[dim(s.representative)] += 1
            continue
        for a, mult in cone_power_multiplicities(s.in_size):
            tally[s.shift + a] += mult
            tally[s.shift + a + 1] += mult
    if tally != c.sizes():
        raise DecompositionMismatch(
            f"graded generator counts {tally} differ from the complex {c.sizes()}")

    report = DecompositionReport(c.n, c.k, len(summands),
                                 sum(1 for s in summands if s.is_free), tally)
    rings = tuple(rings)
    snfs = complex_snf(c) if rings else []
    for ring in rings:
        expected = homology_from_snf(c, snfs, ring)
        got = model_homology(summands, c.top_degree, ring, c.direction)
        diff = expected.differences(got)
        if diff:
            raise DecompositionMismatch(
                f"cone model homology over {ring} differs from the oracle: {'; '.join(diff)}")
        report.rings_checked.append(str(ring))
    return report
