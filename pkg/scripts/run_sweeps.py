#!/usr/bin/env python3
"""Sweep whole families of parabolics and summarize the verification.

Example:
    python scripts/run_sweeps.py --families sl:8 sp:10 so:10 --csv out/
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

from richline.cli import _sweep_csv
from richline.richardson import summarize_sweep, sweep


def parse_family(token: str) -> tuple[str, int]:
    family, _, bound = token.partition(":")
    if family not in ("sl", "sp", "so") or not bound.isdigit():
        raise SystemExit(f"bad family token {token!r}, expected e.g. sp:10")
    return family, int(bound)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--families", nargs="+", default=["sl:8", "sp:10", "so:10"],
                        metavar="FAMILY:MAX")
    parser.add_argument("--budget", type=int, default=3)
    parser.add_argument("--csv", type=pathlib.Path, default=None,
                        help="directory for one CSV per family")
    args = parser.parse_args(argv)

    for token in args.families:
        family, bound = parse_family(token)
        start = time.time()
        rows = sweep(family, bound, budget=args.budget)
        counts = summarize_sweep(rows)
        print(f"{family} <= {bound}: {len(rows)} specs, "
              f"{counts['richardson']} simple, {counts['branched']} branched, "
              f"{counts['exhausted']} exhausted ({time.time() - start:.1f}s)")
        for row in rows:
            if row.status == "exhausted":
                print(f"  EXHAUSTED {row.spec}: {row.error}", file=sys.stderr)
        if args.csv is not None:
            args.csv.mkdir(parents=True, exist_ok=True)
            path = args.csv / f"sweep_{family}_{bound}.csv"
            path.write_text(_sweep_csv(rows) + "\n", encoding="utf-8")
            print(f"  wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
