"""Command-line front end.

Subcommands: gen (write an instance file), solve (run one instance),
compare / sweep / noise (Monte-Carlo tables as CSV, with a companion
figure rendered next to the CSV unless --no-plot).

Exit codes: 0 on success, 2 on validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import experiments
from .construct import SIX_METHODS, Variant
from .errors import LatsumError
from .instance import (
    InstanceParams,
    InstanceRecord,
    SplitMix64,
    add_noise,
    gen_instance,
    load,
    save,
)
from .solver import solve


def _add_common_experiment_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--trials", type=int, required=True, help="trials per point")
    sub.add_argument("--seed", type=int, required=True, help="base seed")
    sub.add_argument("--out", required=True, help="output CSV path")
    sub.add_argument(
        "--no-timing",
        action="store_true",
        help="zero the mean_ms column so reruns are byte-identical",
    )
    sub.add_argument(
        "--no-plot", action="store_true", help="skip the companion figure"
    )
    sub.add_argument(
        "--time-budget",
        type=float,
        default=None,
        help="per-trial reduction budget in seconds (default: none)",
    )


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise ValueError(f"bad n list: {text!r}")
    if not values or any(n < 1 for n in values):
        raise ValueError(f"bad n list: {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latsum",
        description="Solve random subset-sum instances by lattice reduction.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate an instance file")
    gen.add_argument("--n", type=int, required=True)
    group = gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--exponent", type=int, help="weights uniform on [1, 2^K]")
    group.add_argument(
        "--epsilon", help="theoretical density: exponent = ceil((1/2+eps)*n^2)"
    )
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True)
    gen.add_argument(
        "--noise",
        action="store_true",
        help="perturb weights by {-1,0,1}; noise seed is the first word of "
        "the SplitMix64 stream over --seed",
    )
    gen.add_argument(
        "--hamming-weight",
        type=int,
        default=None,
        help="fix |e| instead of drawing fair coins",
    )

    slv = subs.add_parser("solve", help="solve one instance file")
    slv.add_argument("--variant", required=True, help="e.g. classic+flip+p, extrarow")
    slv.add_argument("--in", dest="path", required=True)
    slv.add_argument("--noisy", action="store_true", help="allow |f0| <= n slack")
    slv.add_argument("--json", action="store_true", help="machine-readable report")

    cmp_ = subs.add_parser("compare", help="six-variant comparison at ceil(n^2/2)")
    cmp_.add_argument("--n", required=True, help="comma-separated list, e.g. 8,12")
    _add_common_experiment_args(cmp_)

    swp = subs.add_parser("sweep", help="phase-transition sweep over exponents")
    swp.add_argument("--n", type=int, required=True)
    swp.add_argument("--exp-from", type=int, required=True)
    swp.add_argument("--exp-to", type=int, required=True)
    swp.add_argument("--step", type=int, required=True)
    swp.add_argument(
        "--variants",
        default=",".join(SIX_METHODS),
        help="comma-separated variant strings (default: all six)",
    )
    _add_common_experiment_args(swp)

    noi = subs.add_parser("noise", help="noisy-input experiment at ceil(n^2/2)")
    noi.add_argument("--n", required=True, help="comma-separated list")
    _add_common_experiment_args(noi)

    return parser


def _cmd_gen(args) -> int:
    if args.exponent is not None:
        params = InstanceParams(args.n, args.exponent, args.seed, args.hamming_weight)
    else:
        params = InstanceParams.from_epsilon(
            args.n, args.epsilon, args.seed, args.hamming_weight
        )
    truth, observed = gen_instance(params)
    if args.noise:
        noise_seed = SplitMix64(args.seed).next_u64()
        truth, observed = add_noise(truth, observed, noise_seed)
    save(InstanceRecord(params.exponent, params.seed, observed, truth), args.out)
    print(f"wrote {args.out} (n={observed.n}, exponent={params.exponent})")
    return 0


def _cmd_solve(args) -> int:
    record = load(args.path)
    variant = Variant.from_string(args.variant)
    report = solve(record.observed, variant, noisy=args.noisy)
    matched = None
    if record.truth is not None and report.e is not None:
        matched = report.e == record.truth.e
    if args.json:
        doc = {
            "status": report.status,
            "e": list(report.e) if report.e is not None else None,
            "matched_column": report.matched_column,
            "k": report.k,
            "flipped": report.flipped,
            "norm_bound_m": str(report.norm_bound_m),
            "first_vector_norm_sq": str(report.first_vector_norm_sq),
            "first_norm_within_m": report.first_norm_within_m,
            "matched_ground_truth": matched,
            "wall_time_s": report.wall_time,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"status: {report.status}")
        if report.e is not None:
            print(f"e: {''.join(str(b) for b in report.e)}")
            print(f"column: {report.matched_column}  k: {report.k}")
        print(f"flipped: {report.flipped}")
        print(f"first vector within m: {report.first_norm_within_m}")
        if matched is not None:
            print(f"matched ground truth: {matched}")
        print(f"time: {report.wall_time:.3f}s")
    return 0


def _emit(results, args, figure_kind: str, title: str) -> int:
    rows = experiments.summarize(results)
    experiments.write_csv(rows, args.out, include_timing=not args.no_timing)
    print(f"wrote {args.out} ({len(rows)} rows)")
    if not args.no_plot:
        from . import plots  # matplotlib import deferred to first use

        fig_path = str(Path(args.out).with_suffix(".png"))
        if figure_kind == "sweep":
            plots.render_sweep_curves(rows, fig_path, title)
        else:
            plots.render_rate_bars(rows, fig_path, title)
        print(f"wrote {fig_path}")
    return 0


def _cmd_compare(args) -> int:
    n_list = _parse_n_list(args.n)
    results = experiments.compare_variants(
        n_list, args.trials, args.seed, time_budget=args.time_budget
    )
    return _emit(results, args, "bars", f"six variants, {args.trials} trials")


def _cmd_sweep(args) -> int:
    if args.step <= 0:
        raise ValueError("--step must be positive")
    lo, hi = sorted((args.exp_from, args.exp_to))
    exponents = list(range(hi, lo - 1, -args.step))
    config = experiments.SweepConfig(
        n=args.n,
        exponents=tuple(exponents),
        trials=args.trials,
        variants=tuple(x for x in args.variants.split(",") if x),
        base_seed=args.seed,
        time_budget=args.time_budget,
    )
    results = experiments.phase_sweep(config)
    return _emit(
        results, args, "sweep", f"phase sweep, n={args.n}, {args.trials} trials/point"
    )


def _cmd_noise(args) -> int:
    n_list = _parse_n_list(args.n)
    results = experiments.noise_experiment(
        n_list, args.trials, args.seed, time_budget=args.time_budget
    )
    return _emit(results, args, "bars", f"noisy inputs, {args.trials} trials")


_COMMANDS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "noise": _cmd_noise,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, LatsumError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
