"""Monte-Carlo harness: variant comparison, phase sweep, noise runs.

Trials are paired: every variant at a given (n, exponent, trial index)
sees the identical instance, with per-trial seeds drawn from a SplitMix64
stream over the base seed.  Aggregated rows are sorted before emission,
so the CSV is independent of execution order.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from statistics import fmean

from .construct import SIX_METHODS, Variant
from .errors import ReductionTimeoutError
from .instance import (
    InstanceParams,
    SplitMix64,
    add_noise,
    gen_instance,
    theoretical_exponent,
)
from .oracle import MAX_SUBSET_N, brute_force_subset_sum
from .solver import solve

TIMEOUT = "timeout"


@dataclass(frozen=True)
class TrialResult:
    seed: int
    n: int
    exponent: int
    variant: str
    noisy: bool
    status: str
    verified: bool
    matched_ground_truth: bool
    first_norm_within_m: bool
    wall_time: float


@dataclass(frozen=True)
class SweepConfig:
    n: int
    exponents: tuple[int, ...]
    trials: int
    variants: tuple[str, ...] = SIX_METHODS
    base_seed: int = 0
    time_budget: float | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.exponents:
            raise ValueError("need at least one exponent")
        if not self.variants:
            raise ValueError("need at least one variant")
        exps = tuple(sorted(set(int(x) for x in self.exponents), reverse=True))
        if any(x < 1 for x in exps):
            raise ValueError("exponents must be >= 1")
        object.__setattr__(self, "exponents", exps)


@dataclass(frozen=True)
class ResultRow:
    """One aggregated CSV row."""

    n: int
    exponent: int
    variant: str
    noisy: bool
    trials: int
    solved_rate: float
    ground_truth_rate: float
    mean_ms: float


def trial_seeds(base_seed: int, trials: int) -> list[tuple[int, int]]:
    """(instance seed, noise seed) per trial, from the reference stream.

    Two words are consumed per trial even in noiseless runs, so noisy and
    noiseless experiments over the same base seed are paired on identical
    underlying instances.
    """
    rng = SplitMix64(base_seed)
    return [(rng.next_u64(), rng.next_u64()) for _ in range(trials)]


def _run_cell(
    n: int,
    exponent: int,
    variants,
    seeds,
    noisy: bool,
    cross_check: bool,
    time_budget: float | None,
) -> list[TrialResult]:
    """All trials for one (n, exponent) cell, every variant on the same
    instances."""
    results = []
    for gen_seed, noise_seed in seeds:
        truth, observed = gen_instance(InstanceParams(n, exponent, gen_seed))
        if noisy:
            truth, observed = add_noise(truth, observed, noise_seed)
        tolerance = n if noisy else 0
        for name in variants:
            variant = Variant.from_string(name)
            try:
                report = solve(observed, variant, noisy=noisy, max_seconds=time_budget)
            except ReductionTimeoutError:
                results.append(
                    TrialResult(
                        gen_seed, n, exponent, name, noisy, TIMEOUT,
                        False, False, False, time_budget or 0.0,
                    )
                )
                continue
            verified = report.solved
            if verified and cross_check and n <= MAX_SUBSET_N:
                solutions = brute_force_subset_sum(
                    observed.weights, observed.B0, tolerance
                )
                if report.e not in solutions:
                    raise RuntimeError(
                        f"cross-check failed: n={n} seed={gen_seed} variant={name}"
                    )
            results.append(
                TrialResult(
                    gen_seed,
                    n,
                    exponent,
                    name,
                    noisy,
                    report.status,
                    verified,
                    verified and report.e == truth.e,
                    report.first_norm_within_m,
                    report.wall_time,
                )
            )
    return results


def compare_variants(
    n_list,
    trials: int,
    seed: int,
    variants=SIX_METHODS,
    cross_check: bool = False,
    time_budget: float | None = None,
) -> list[TrialResult]:
    """Noiseless comparison at the prescribed exponent ceil(n^2/2)."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seeds = trial_seeds(seed, trials)
    results = []
    for n in n_list:
        results += _run_cell(
            n, theoretical_exponent(n), variants, seeds, False, cross_check, time_budget
        )
    return results


def phase_sweep(config: SweepConfig, cross_check: bool = False) -> list[TrialResult]:
    """Success rates while the weight magnitude drops toward the
    transition.  Same per-trial seeds at every exponent."""
    seeds = trial_seeds(config.base_seed, config.trials)
    results = []
    for exponent in config.exponents:
        results += _run_cell(
            config.n, exponent, config.variants, seeds, False,
            cross_check, config.time_budget,
        )
    return results


def noise_experiment(
    n_list,
    trials: int,
    seed: int,
    variants=SIX_METHODS,
    cross_check: bool = False,
    time_budget: float | None = None,
) -> list[TrialResult]:
    """Noisy-instance runs at the prescribed exponent; the with-p methods
    are included on purpose to observe their failure."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seeds = trial_seeds(seed, trials)
    results = []
    for n in n_list:
        results += _run_cell(
            n, theoretical_exponent(n), variants, seeds, True, cross_check, time_budget
        )
    return results


def summarize(results) -> list[ResultRow]:
    """Aggregate trials into per-(n, exponent, variant, noisy) rows,
    sorted by n, then exponent descending, then variant string."""
    cells: dict[tuple, list[TrialResult]] = {}
    for r in results:
        cells.setdefault((r.n, r.exponent, r.variant, r.noisy), []).append(r)
    rows = []
    for (n, exponent, variant, noisy), group in cells.items():
        total = len(group)
        rows.append(
            ResultRow(
                n=n,
                exponent=exponent,
                variant=variant,
                noisy=noisy,
                trials=total,
                solved_rate=sum(r.verified for r in group) / total,
                ground_truth_rate=sum(r.matched_ground_truth for r in group) / total,
                mean_ms=fmean(r.wall_time for r in group) * 1000.0,
            )
        )
    rows.sort(key=lambda r: (r.n, -r.exponent, r.variant))
    return rows


CSV_FIELDS = (
    "n", "exponent", "variant", "noisy", "trials",
    "solved_rate", "ground_truth_rate", "mean_ms",
)


def render_csv(rows, include_timing: bool = True) -> str:
    """Stable textual form of the rows.  With include_timing=False the
    mean_ms column is zeroed so reruns are byte-identical."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow(
            [
                r.n,
                r.exponent,
                r.variant,
                "true" if r.noisy else "false",
                r.trials,
                f"{r.solved_rate:.4f}",
                f"{r.ground_truth_rate:.4f}",
                f"{r.mean_ms:.3f}" if include_timing else "0.000",
            ]
        )
    return buf.getvalue()


def write_csv(rows, path, include_timing: bool = True) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(rows, include_timing=include_timing))
