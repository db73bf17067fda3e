#!/usr/bin/env python3
"""Growth tables for the built-in presets; optionally write CSV files."""

import argparse
from pathlib import Path

from refilt.growth import gk_estimate, growth_csv
from refilt.presets import all_presets
from refilt.refilter import refilter


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=60)
    parser.add_argument("--outdir", type=Path, default=None, help="write <preset>.csv files here")
    args = parser.parse_args()

    for name, pres in all_presets().items():
        w = refilter(pres).weight.w
        table = gk_estimate(pres, w, args.nmax)
        kind = "estimate" if table.is_estimate else "exact"
        print(f"{name}: w={w}, growth degree {table.estimated_degree} ({kind}), h({args.nmax})={table.counts[-1]}")
        if args.outdir is not None:
            args.outdir.mkdir(parents=True, exist_ok=True)
            (args.outdir / f"{name}.csv").write_text(growth_csv(table))


if __name__ == "__main__":
    main()
