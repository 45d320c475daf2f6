#!/usr/bin/env python3
"""Reproduce the two headline tables and dump CSVs.

Usage: python scripts/reproduce_tables.py [--seed 0] [--trials 50] [--outdir results]
"""

import argparse
import time
from pathlib import Path

from evobandit.harness import table1, table2, write_table_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    t0 = time.time()
    recs1 = table1(base_seed=args.seed, trials=args.trials)
    write_table_csv(outdir / "table1.csv", recs1)
    recs2 = table2(base_seed=args.seed, trials=args.trials)
    write_table_csv(outdir / "table2.csv", recs2)

    for rec in recs1 + recs2:
        print(f"{rec['agent']:>10}  {rec['env']:<18} {rec['mean']:7.2f} ± {rec['stderr']:.2f}")
    print(f"done in {time.time() - t0:.0f}s -> {outdir}/table1.csv, {outdir}/table2.csv")


if __name__ == "__main__":
    main()
