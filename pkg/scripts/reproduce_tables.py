#!/usr/bin/env python
"""Rebuild the checked-in count tables from scratch and compare.

Runs the exhaustive table for both order-4n families (dicyclic and
dihedral), n = 2..5, subset sizes 2..10, against the published values.
Exit code 0 means every cell matched.
"""

import argparse

from sumdiff import cli


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument(
        "--no-compare",
        action="store_true",
        help="print the recomputed counts without diffing against the data file",
    )
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    worst = 0
    for family in ("dic", "dihedral"):
        cmd = [
            "table", "--family", family, "--n", "2..5", "--sizes", "2..10",
            "--format", args.format,
        ]
        if not args.no_compare:
            cmd += ["--expect", "paper"]
        if args.workers is not None:
            cmd += ["--workers", str(args.workers)]
        worst = max(worst, cli.main(cmd))
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
