#!/usr/bin/env python
"""Print the finite-n observations behind the open questions.

Three views: divisibility patterns of the exhaustive counts over small
dicyclic groups, the size-3 sum/difference dominance ratio along odd n,
and the structured boundary family versus its lower bounds. None of
this proves anything; the numbers are inputs to guesses.
"""

import argparse

from sumdiff import cli


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", default="2..6", help="range for the divisibility probe")
    p.add_argument("--sizes", default="2..4")
    p.add_argument("--ratio-n", default="3..21:odd", help="range for the dominance ratio")
    p.add_argument("--boundary-n", default="6..8", help="range for the structured boundary")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--workers", type=int, default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    extra = ["--format", args.format]
    if args.workers is not None:
        extra += ["--workers", str(args.workers)]
    worst = cli.main(["probe", "--n", args.n, "--sizes", args.sizes] + extra)
    worst = max(worst, cli.main(["probe", "--ratios", "--n", args.ratio_n] + extra))
    for n in cli.parse_range(args.boundary_n):
        worst = max(worst, cli.main(["boundary", "--n", str(n)] + extra))
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
