"""Command-line harness.

Subcommands:
    run         execute a configured experiment (multi-run, multi-dataset)
    baseline    full-feature 1NN CV accuracy of one dataset
    explain-llh list the 16 low-level heuristics
    compare     render a report against published reference numbers
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .dataset import min_max_normalize
from .evaluation import CvProtocol
from .experiment import (ExperimentSpec, dump_correlation_caches,
                         full_feature_baseline, load_config,
                         render_comparison, run_experiment, summary_text,
                         verify_report)
from .llh import describe_catalog


def _apply_overrides(spec: ExperimentSpec, args) -> ExperimentSpec:
    changes = {}
    if args.dataset:
        keep = {name.lower() for name in args.dataset}
        chosen = tuple(d for d in spec.datasets if d.name.lower() in keep)
        missing = keep - {d.name.lower() for d in chosen}
        if missing:
            raise SystemExit(f"unknown dataset(s): {', '.join(sorted(missing))}")
        changes["datasets"] = chosen
    if args.runs is not None:
        changes["runs"] = args.runs
    if args.seed is not None:
        changes["master_seed"] = args.seed
    if args.out is not None:
        changes["out_dir"] = args.out
    if args.cv_folds is not None:
        changes["cv_folds"] = args.cv_folds
    if args.search_repeats is not None:
        changes["search_repeats"] = args.search_repeats
    if args.report_repeats is not None:
        changes["report_repeats"] = tuple(
            int(tok) for tok in args.report_repeats.split(",") if tok.strip())
    sup_changes = {}
    for key in ("generations", "population_size", "p_crossover", "p_mutation",
                "nllh", "elitism", "mutn_rate"):
        value = getattr(args, key)
        if value is not None:
            sup_changes[key] = value
    if sup_changes:
        changes["supervisor"] = dataclasses.replace(spec.supervisor, **sup_changes)
    return dataclasses.replace(spec, **changes) if changes else spec


def _cmd_run(args) -> int:
    spec = _apply_overrides(load_config(args.config), args)
    if args.dump_cache:
        for path in dump_correlation_caches(spec):
            print(f"wrote {path}")
    reports = run_experiment(spec, progress=print)
    print()
    print(summary_text(reports, spec))
    failed = [r["dataset"] for r in reports if "error" in r]
    if failed:
        print(f"\npartial results: {', '.join(failed)} failed", file=sys.stderr)
        return 1
    return 0


def _cmd_baseline(args) -> int:
    spec = load_config(args.config)
    entries = {d.name.lower(): d for d in spec.datasets}
    entry = entries.get(args.dataset.lower())
    if entry is None:
        raise SystemExit(f"unknown dataset {args.dataset!r}; "
                         f"config defines: {', '.join(sorted(entries))}")
    dataset = min_max_normalize(entry.load())
    folds = args.cv_folds if args.cv_folds is not None else spec.cv_folds
    repeats = args.repeats
    seed = args.seed if args.seed is not None else spec.master_seed
    proto = CvProtocol(folds=folds, repeats=repeats, base_seed=seed)
    acc = full_feature_baseline(dataset, proto)
    print(f"{dataset.name}: {dataset.n_instances} instances, "
          f"{dataset.n_features} features, {dataset.class_count} classes")
    print(f"full-feature 1NN accuracy ({proto.label()}-fold CV, seed {seed}): {acc:.4f}")
    return 0


def _cmd_explain_llh(_args) -> int:
    print(describe_catalog())
    return 0


def _cmd_compare(args) -> int:
    for path in args.report:
        with open(path) as fh:
            report = json.load(fh)
        if "error" in report:
            print(f"{report['dataset']}: no results ({report['error']})")
            continue
        verify_report(report)
        print(render_comparison(report))
        print()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhfs",
        description="Hyper-heuristic feature selection: GA supervisor over "
                    "16 bit-mask local searches with a 1NN wrapper fitness.")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a configured experiment")
    run_p.add_argument("--config", required=True, help="INI experiment config")
    run_p.add_argument("--dataset", action="append",
                       help="restrict to this dataset (repeatable)")
    run_p.add_argument("--runs", type=int)
    run_p.add_argument("--seed", type=int, help="master seed")
    run_p.add_argument("--out", help="output directory")
    run_p.add_argument("--generations", type=int)
    run_p.add_argument("--population-size", dest="population_size", type=int)
    run_p.add_argument("--p-crossover", dest="p_crossover", type=float)
    run_p.add_argument("--p-mutation", dest="p_mutation", type=float)
    run_p.add_argument("--nllh", type=int, help="chromosome length")
    run_p.add_argument("--elitism", type=int)
    run_p.add_argument("--mutn-rate", dest="mutn_rate", type=float)
    run_p.add_argument("--cv-folds", dest="cv_folds", type=int)
    run_p.add_argument("--search-repeats", dest="search_repeats", type=int,
                       help="CV repeats for search-time fitness")
    run_p.add_argument("--report-repeats", dest="report_repeats",
                       help="comma-separated CV repeats for reporting, e.g. 10,5")
    run_p.add_argument("--dump-cache", action="store_true",
                       help="write each dataset's correlation cache as CSV")
    run_p.set_defaults(func=_cmd_run)

    base_p = sub.add_parser("baseline", help="full-feature 1NN CV accuracy")
    base_p.add_argument("--config", required=True)
    base_p.add_argument("--dataset", required=True)
    base_p.add_argument("--cv-folds", dest="cv_folds", type=int)
    base_p.add_argument("--repeats", type=int, default=10)
    base_p.add_argument("--seed", type=int)
    base_p.set_defaults(func=_cmd_baseline)

    explain_p = sub.add_parser("explain-llh", help="list the low-level heuristics")
    explain_p.set_defaults(func=_cmd_explain_llh)

    compare_p = sub.add_parser("compare",
                               help="compare a report against published numbers")
    compare_p.add_argument("--report", action="append", required=True,
                           help="path to a report.json (repeatable)")
    compare_p.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
