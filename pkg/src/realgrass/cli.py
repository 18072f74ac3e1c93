"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 resource/I-O.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import formats
from .closed_form import cohomology_closed
from .combinatorics import check_size
from .complex import build_complex
from .errors import InvalidArgument, ResourceLimit, UnsupportedSize
from .modules import CoefficientRing
from .oracle import check_oracle_scale, homology_with_coefficients
from .suite import run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("realgrass")


def _ring(text: str) -> CoefficientRing:
    try:
        return CoefficientRing.parse(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text)
    except OSError as exc:
        raise ResourceLimit(f"cannot write {out}: {exc.strerror or exc}") from exc


def _render_module(args, module) -> str:
    if args.format == "json":
        return formats.module_to_json(args.n, args.k, module) + "\n"
    if args.format == "csv":
        return formats.module_to_csv(module)
    return formats.module_to_table(args.n, args.k, module)


def cmd_cohomology(args) -> int:
    check_size(args.n, args.k)
    closed = oracle = None
    if args.method in ("oracle", "both"):
        check_oracle_scale(args.n, args.k)
        oracle = homology_with_coefficients(build_complex(args.n, args.k), args.coeff)
    if args.method in ("closed", "both"):
        closed = cohomology_closed(args.n, args.k, args.coeff)
    _emit(_render_module(args, closed if closed is not None else oracle), args.out)
    if args.method == "both":
        diff = closed.differences(oracle)
        if diff:
            print("closed formula and oracle disagree:", file=sys.stderr)
            for line in diff:
                print("  " + line, file=sys.stderr)
            return EXIT_MISMATCH
        print(f"match: closed formula equals SNF oracle for Gr_{args.k}({args.n}) "
              f"over {args.coeff}", file=sys.stderr)
    return EXIT_OK


def cmd_complex(args) -> int:
    check_size(args.n, args.k)
    render = {"json": formats.complex_to_json, "csv": formats.complex_to_csv,
              "dot": formats.complex_to_dot}[args.format]
    _emit(render(args.n, args.k), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()

    def progress(n, k):
        log.info("Gr_%d(%d) ok", k, n)

    result = run_suite(args.max_n, progress)
    elapsed = time.perf_counter() - start
    if not result.passed:
        print(f"FAIL: {result.failure}")
        return EXIT_MISMATCH
    print(f"PASS: {len(result.checked)} Grassmannians with n <= {args.max_n} "
          f"verified in {elapsed:.2f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realgrass",
        description="Cohomology of real Grassmannians from their Schubert cell complex.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def shape(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")

    p = sub.add_parser("cohomology", help="graded cohomology groups")
    shape(p)
    p.add_argument("--coeff", type=_ring, default=CoefficientRing.integers(),
                   help="Z, Q or Z/<m> (default Z)")
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("complex", help="export the cochain complex")
    shape(p)
    p.add_argument("--format", choices=("json", "csv", "dot"), default="json")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("dot", help="export the cochain complex as Graphviz")
    shape(p)
    p.set_defaults(func=cmd_complex, format="dot")

    p = sub.add_parser("verify", help="exhaustive consistency suite")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")
    try:
        return args.func(args)
    except (InvalidArgument, UnsupportedSize) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
