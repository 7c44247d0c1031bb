"""Command-line front end for the batch alignment runner."""

from __future__ import annotations

import argparse

from .runner import KERNELS, RunConfig, run
from .vectors import _ALLOWED_LANES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="swscan",
        description=(
            "Align query/target sequence pairs with a scalar or striped "
            "vector-model kernel and report scores, timings, and vector "
            "operation counters as TSV."
        ),
    )
    p.add_argument(
        "--kernel",
        choices=list(KERNELS),
        default="scan",
        help="alignment kernel (default: scan)",
    )
    p.add_argument(
        "--lanes",
        type=int,
        choices=list(_ALLOWED_LANES),
        default=8,
        metavar="N",
        help="vector lane count for the striped kernels (default: 8; "
        "ignored by the scalar kernel, which reports lanes=0)",
    )
    p.add_argument("--match", type=int, default=2, help="match score (default: 2)")
    p.add_argument(
        "--mismatch", type=int, default=-1, help="mismatch score (default: -1)"
    )
    p.add_argument(
        "--matrix",
        metavar="FILE",
        help="substitution matrix file (overrides --match/--mismatch and the "
        "DNA alphabet); line 1 lists symbols, then one row of integers per symbol",
    )
    p.add_argument(
        "--gap-open", type=int, default=3, help="gap open penalty (default: 3)"
    )
    p.add_argument(
        "--gap-extend", type=int, default=1, help="gap extend penalty (default: 1)"
    )
    p.add_argument("--query", metavar="FILE", help="query FASTA file")
    p.add_argument("--target", metavar="FILE", help="target FASTA file")
    p.add_argument(
        "--pairs",
        choices=["all-vs-all", "zip"],
        default="all-vs-all",
        help="pairing of query x target records (default: all-vs-all)",
    )
    p.add_argument(
        "--random",
        type=int,
        metavar="N",
        help="generate N random pairs instead of reading FASTA files",
    )
    p.add_argument(
        "--len-min",
        type=int,
        default=1,
        metavar="L",
        help="minimum generated sequence length (default: 1)",
    )
    p.add_argument(
        "--len-max",
        type=int,
        default=256,
        metavar="L",
        help="maximum generated sequence length (default: 256)",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=1,
        metavar="S",
        help="seed for the pair generator (default: 1)",
    )
    p.add_argument("--out", metavar="FILE", help="write TSV here instead of stdout")
    p.add_argument(
        "--bench",
        type=int,
        default=1,
        metavar="R",
        help="repeat each pair R times and report the minimum time_ns (default: 1)",
    )
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.random is not None and (args.query or args.target):
        parser.error("--random cannot be combined with --query/--target")
    if args.random is None and (args.query is None or args.target is None):
        parser.error("provide both --query and --target, or use --random N")
    if args.random is not None and args.random < 0:
        parser.error("--random must be >= 0")
    if args.bench < 1:
        parser.error("--bench must be >= 1")
    if not 1 <= args.len_min <= args.len_max:
        parser.error("require 1 <= --len-min <= --len-max")
    config = RunConfig(
        kernel=args.kernel,
        lanes=args.lanes,
        match=args.match,
        mismatch=args.mismatch,
        matrix_path=args.matrix,
        gap_open=args.gap_open,
        gap_extend=args.gap_extend,
        query_path=args.query,
        target_path=args.target,
        pairs_mode=args.pairs,
        random_count=args.random,
        len_min=args.len_min,
        len_max=args.len_max,
        seed=args.seed,
        out_path=args.out,
        bench=args.bench,
    )
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
