"""Command-line entry points for the reproduction studies."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .genetic import GTSConfig
from .harness import (
    AGENT_KINDS,
    DEFAULT_LAMBDAS,
    ExperimentConfig,
    epidemic_study,
    pareto_sweep,
    run_experiment,
    save_records,
    summary_record,
    sweep_mutation,
    sweep_population,
    table1,
    table2,
    write_trials_csv,
)


def _period(text: str):
    if text.lower() == "none":
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("period must be positive or 'none'")
    return value


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, default=50, metavar="R")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evobandit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="single experiment")
    run.add_argument("--agent", choices=AGENT_KINDS, default="ts")
    run.add_argument("--arms", type=int, default=10, metavar="K")
    run.add_argument("--population", type=int, default=100, metavar="M")
    run.add_argument("--mutations", type=int, default=150, metavar="MU")
    run.add_argument("--selection-ratio", type=float, default=0.5, metavar="G")
    run.add_argument("--init-upper", type=float, default=1.0, metavar="Q")
    run.add_argument("--nonstationary-period", type=_period, default=10, metavar="N|none")
    run.add_argument("--horizon", type=int, default=100, metavar="T")
    run.add_argument("--lambda", dest="lam", type=float, default=1.0, metavar="L")
    run.add_argument("--scalarize", choices=("literal", "convex"), default="convex")
    run.add_argument("--env", choices=("mab", "epidemic"), default="mab")
    _add_common(run)

    for name in ("table1", "table2", "sweep-population", "sweep-mutation"):
        p = sub.add_parser(name, help=f"{name} reproduction")
        _add_common(p)

    epi = sub.add_parser("epidemic", help="combinatorial intervention study")
    epi.add_argument("--lambda", dest="lam", type=float, default=1.0, metavar="L")
    epi.add_argument("--scalarize", choices=("literal", "convex"), default="convex")
    _add_common(epi)

    par = sub.add_parser("pareto", help="budget/cases frontier sweep")
    par.add_argument("--scalarize", choices=("literal", "convex"), default="convex")
    _add_common(par)
    return parser


def _emit(records: list[dict], args) -> None:
    if args.out:
        save_records(records, args.out, args.format)
    for rec in records:
        line = f"{rec['agent']:>14}  {rec['env']:<24} {rec['mean']:8.2f} ± {rec['stderr']:.2f}"
        print(line)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "run":
        gts = None
        if args.agent in ("gts", "indcomb-gts"):
            gts = GTSConfig(
                population_size=args.population,
                mutation_count=args.mutations,
                selection_ratio=args.selection_ratio,
                init_upper=args.init_upper,
            )
        cfg = ExperimentConfig(
            agent=args.agent,
            env=args.env,
            n_arms=args.arms,
            period=args.nonstationary_period,
            horizon=args.horizon,
            trials=args.trials,
            base_seed=args.seed,
            gts=gts,
            lam=args.lam,
            scalarize_mode=args.scalarize,
        )
        summary, trajectories = run_experiment(cfg)
        if args.out and args.format == "csv":
            write_trials_csv(args.out, cfg, trajectories)
        rec = summary_record(cfg, summary)
        if args.out and args.format == "json":
            save_records([rec], args.out, "json")
        print(f"{rec['agent']}  {rec['env']}  {rec['mean']:.2f} ± {rec['stderr']:.2f}  ({rec['trials']} trials)")
        return 0

    if args.command == "table1":
        _emit(table1(base_seed=args.seed, trials=args.trials), args)
    elif args.command == "table2":
        _emit(table2(base_seed=args.seed, trials=args.trials), args)
    elif args.command == "sweep-population":
        _emit(sweep_population(base_seed=args.seed, trials=args.trials), args)
    elif args.command == "sweep-mutation":
        _emit(sweep_mutation(base_seed=args.seed, trials=args.trials), args)
    elif args.command == "epidemic":
        records = epidemic_study(
            base_seed=args.seed, trials=args.trials, lam=args.lam, scalarize_mode=args.scalarize
        )
        if args.out:
            save_records(records, args.out, args.format)
        for rec in records:
            print(
                f"{rec['agent']:>14}  reward {rec['mean']:6.2f} ± {rec['stderr']:.2f}"
                f"   cost {rec['mean_cost']:7.1f} ± {rec['stderr_cost']:.1f}"
            )
    elif args.command == "pareto":
        result = pareto_sweep(base_seed=args.seed, trials=args.trials, scalarize_mode=args.scalarize)
        payload = {
            "points": result["points"],
            "frontiers": {
                agent: [dataclasses.asdict(p) for p in pts]
                for agent, pts in result["frontiers"].items()
            },
        }
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(payload, fh, indent=2)
        for agent, pts in payload["frontiers"].items():
            print(agent, " ".join(f"({p['budget']:.2f},{p['cases']:.3f})" for p in pts))
    return 0


if __name__ == "__main__":
    sys.exit(main())
