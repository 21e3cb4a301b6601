"""Figures for experiment reports, written next to the CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_rate_bars(rows, path, title: str) -> None:
    """Grouped success-rate bars: one group per n, one bar per variant."""
    ns = sorted({r.n for r in rows})
    variants = sorted({r.variant for r in rows})
    width = 0.8 / max(len(variants), 1)
    fig, ax = plt.subplots(figsize=(1.8 + 1.1 * len(ns) * len(variants) / 3, 4.0))
    for vi, variant in enumerate(variants):
        rates = []
        for n in ns:
            cell = [r for r in rows if r.n == n and r.variant == variant]
            rates.append(cell[0].solved_rate if cell else 0.0)
        offsets = [i + (vi - (len(variants) - 1) / 2) * width for i in range(len(ns))]
        ax.bar(offsets, rates, width=width, label=variant)
    ax.set_xticks(range(len(ns)))
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("n")
    ax.set_ylabel("solved rate")
    ax.set_ylim(0, 1.05)
    ax.set_title(title)
    ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sweep_curves(rows, path, title: str) -> None:
    """Success rate against the weight exponent, one curve per variant."""
    variants = sorted({r.variant for r in rows})
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for variant in variants:
        pts = sorted((r.exponent, r.solved_rate) for r in rows if r.variant == variant)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=variant)
    ax.set_xlabel("exponent (weights up to 2^exponent)")
    ax.set_ylabel("solved rate")
    ax.set_ylim(-0.05, 1.05)
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
