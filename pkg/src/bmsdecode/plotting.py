"""Figures for experiment reports (matplotlib, Agg backend, files only)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .bms import BmsState  # noqa: E402
from .experiment import OrderSummary, TrialRecord  # noqa: E402
from .lattice import b_delta  # noqa: E402


def discrepancy_heatmap(state: BmsState, t: int, bounds: tuple[int, int], path: str | Path,
                        title: str = "") -> Path:
    """Where the reference run met nonzero discrepancies, with B_(2t+1) outlined."""
    r1, r2 = bounds
    grid = np.zeros((r1, r2))
    for row in state.trace[1:]:
        i, j = row.l
        if i < r1 and j < r2 and any(row.discrepancies):
            grid[i, j] = 1 + (row.procedure == "2")
    fig, ax = plt.subplots(figsize=(max(3, r2 * 0.35 + 1.5), max(3, r1 * 0.35 + 1.5)))
    ax.imshow(grid, cmap="Greys", vmin=0, vmax=2, origin="upper")
    for (i, j) in b_delta(2 * t + 1, bounds):
        ax.add_patch(plt.Rectangle((j - 0.5, i - 0.5), 1, 1, fill=False, edgecolor="tab:red", lw=1.5))
    ax.set_xlabel("n2")
    ax.set_ylabel("n1")
    ax.set_xticks(range(r2))
    ax.set_yticks(range(r1))
    ax.set_title(title or f"nonzero discrepancies (grey: update, black: footprint growth); red: B_{2 * t + 1}",
                 fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def footprint_growth(state: BmsState, path: str | Path) -> Path:
    """|Delta| after each step of a run."""
    sizes = [row.delta.size() for row in state.trace]
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.step(range(len(sizes)), sizes, where="post")
    ax.set_xlabel("step")
    ax.set_ylabel("|Delta|")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def summary_bars(summaries: list[OrderSummary], path: str | Path) -> Path:
    """Recovery and restricted-vs-full agreement rates per order."""
    labels = [s.order for s in summaries]
    x = np.arange(len(labels))
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(x - 0.2, [s.recovery_rate for s in summaries], 0.4, label="recovered")
    ax.bar(x + 0.2, [s.agreement_rate for s in summaries], 0.4, label="restricted = full")
    ax.set_xticks(x)
    ax.set_xticklabels(labels)
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=7, loc="lower right")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def weight_histogram(records: list[TrialRecord], path: str | Path) -> Path:
    """Trials per injected weight, split by outcome."""
    weights = sorted({r.weight for r in records})
    ok = [sum(1 for r in records if r.weight == w and r.recovered) for w in weights]
    bad = [sum(1 for r in records if r.weight == w and not r.recovered) for w in weights]
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(weights, ok, label="recovered")
    ax.bar(weights, bad, bottom=ok, label="not recovered")
    ax.set_xlabel("error weight")
    ax.set_ylabel("trials")
    ax.legend(fontsize=7)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
