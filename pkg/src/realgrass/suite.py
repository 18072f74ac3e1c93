"""Exhaustive consistency checks over every small Grassmannian."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from .closed_form import tally_kinds
from .combinatorics import MAX_N, cell_counts, check_size
from .complex import build_complex, diff_coefficient, sigma_signs
from .decomposition import DEFAULT_RINGS, verify_decomposition
from .errors import DecompositionMismatch, UnsupportedSize
from .modules import CoefficientRing
from .oracle import check_oracle_scale, complex_snf, homology_from_snf

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    checked: list[tuple[int, int]] = field(default_factory=list)
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def check_grassmannian(n: int, k: int, rings=DEFAULT_RINGS) -> str | None:
    """Run every check on Gr_k(n); return a description of the first failure."""
    check_oracle_scale(n, k)
    c = build_complex(n, k)

    for m, composite in c.composites():
        if not composite.is_zero():
            return f"Gr_{k}({n}): differentials through degree {m} do not compose to zero"

    for cells in c.bases:
        for S in cells:
            for r in range(1, k + 1):
                T = S.bump(r)
                if T is not None and sum(sigma_signs(S, T)) != diff_coefficient(S, r):
                    return (f"Gr_{k}({n}): coefficient {S}->{T} is {diff_coefficient(S, r)} "
                            f"but the link signs give {sigma_signs(S, T)}")

    if c.sizes() != cell_counts(n, k):
        return f"Gr_{k}({n}): basis sizes {c.sizes()} differ from partition counts"

    try:
        verify_decomposition(c, rings=())
    except DecompositionMismatch as exc:
        return f"Gr_{k}({n}): {exc}"

    snfs = complex_snf(c)
    tally = tally_kinds(n, k)
    mod2 = homology_from_snf(c, snfs, CoefficientRing.mod(2))
    if mod2.free_ranks() != cell_counts(n, k):
        return f"Gr_{k}({n}): mod 2 Betti numbers {mod2.free_ranks()} differ from cell counts"
    for ring in rings:
        diff = homology_from_snf(c, snfs, ring).differences(tally.module(ring))
        if diff:
            return f"Gr_{k}({n}) over {ring}: oracle vs closed formula: {'; '.join(diff)}"
    return None


def run_suite(max_n: int, progress: Callable[[int, int], None] | None = None) -> SuiteResult:
    """All ``1 <= k <= n <= max_n``; stops at the first failure."""
    if max_n > MAX_N:
        raise UnsupportedSize(f"--max-n {max_n} exceeds the supported maximum {MAX_N}")
    result = SuiteResult()
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            check_size(n, k)
            failure = check_grassmannian(n, k)
            result.checked.append((n, k))
            if progress:
                progress(n, k)
            if failure:
                result.failure = failure
                log.error(failure)
                return result
    return result
