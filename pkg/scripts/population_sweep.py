#!/usr/bin/env python3
"""Population-size and mutation-count sweeps on the shifting 10-armed bandit."""

import argparse

from evobandit.harness import sweep_mutation, sweep_population


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--arms", type=int, default=10)
    args = ap.parse_args()

    print("# population sweep")
    for rec in sweep_population(base_seed=args.seed, trials=args.trials, n_arms=args.arms):
        print(f"{rec['agent']:>10}: {rec['mean']:.2f} ± {rec['stderr']:.2f}")
    print("# mutation sweep (population 100)")
    for rec in sweep_mutation(base_seed=args.seed, trials=args.trials, n_arms=args.arms):
        print(f"{rec['agent']:>10}: {rec['mean']:.2f} ± {rec['stderr']:.2f}")


if __name__ == "__main__":
    main()
