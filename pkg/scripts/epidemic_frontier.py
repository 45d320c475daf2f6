#!/usr/bin/env python3
"""Epidemic intervention study: per-lambda summaries plus the budget/cases frontier."""

import argparse
import json

from evobandit.harness import DEFAULT_LAMBDAS, epidemic_study, pareto_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--out", default=None, help="optional JSON dump of the sweep")
    args = ap.parse_args()

    for lam in DEFAULT_LAMBDAS:
        print(f"# lambda = {lam}")
        for rec in epidemic_study(base_seed=args.seed, trials=args.trials, lam=lam):
            print(
                f"{rec['agent']:>14}  reward {rec['mean']:6.2f} ± {rec['stderr']:.2f}"
                f"   cost {rec['mean_cost']:7.1f} ± {rec['stderr_cost']:.1f}"
            )

    result = pareto_sweep(base_seed=args.seed, trials=args.trials)
    print("# frontiers")
    for agent, pts in result["frontiers"].items():
        print(f"{agent:>14}:", " ".join(f"({p.budget:.2f}, {p.cases:.3f})" for p in pts))
    if args.out:
        payload = {
            "points": result["points"],
            "frontiers": {
                a: [{"budget": p.budget, "cases": p.cases} for p in pts]
                for a, pts in result["frontiers"].items()
            },
        }
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)


if __name__ == "__main__":
    main()
