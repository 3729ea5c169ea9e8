"""Figure rendering for report outputs.

Each report subcommand drops a PNG next to its JSONL output: evaluation
reports get per-seed score bars, bench reports get per-phase timing bars,
ablation grids get a cell heatmap. Rendering is headless (Agg) and the
files are side artifacts; the JSONL stays the canonical output.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["ablate_figure", "bench_figure", "evaluate_figure", "stats_figure"]

_METADATA = {"Software": "hypersum"}


def _save(fig, path: Path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_METADATA)
    plt.close(fig)


def evaluate_figure(records: list[dict], path: Path) -> None:
    """Grouped bars of per-seed macro F1 for each metric."""
    macros = [r for r in records if r["record"] == "seed-macro"]
    if not macros:
        return
    seeds = [str(r["seed"]) for r in macros]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    width = 0.25
    xs = range(len(macros))
    for off, (key, label) in enumerate((("r1", "R1"), ("r2", "R2"), ("rl", "RL"))):
        ax.bar([x + (off - 1) * width for x in xs],
               [r[key][2] for r in macros], width=width, label=label)
    ax.set_xticks(list(xs), seeds)
    ax.set_xlabel("seed")
    ax.set_ylabel("macro F1")
    ax.set_ylim(0, 1)
    ax.legend(frameon=False)
    _save(fig, path)


def bench_figure(record: dict, path: Path) -> None:
    """Per-phase seconds per utterance (min over repeats)."""
    per_utt = record["per_utterance"]
    phases = ["embed", "cluster", "total"]
    fig, ax = plt.subplots(figsize=(5.2, 3.4))
    ax.bar(phases, [per_utt[p]["min"] for p in phases])
    ax.set_ylabel("seconds / utterance (min of repeats)")
    ax.set_title(f"{record['utterances']} utterances, {record['repeats']} repeats")
    _save(fig, path)


def ablate_figure(records: list[dict], path: Path) -> None:
    """Heatmap of mean RL per (variant, corpus); error cells hatched."""
    cells = [r for r in records if r["record"] == "cell"]
    if not cells:
        return
    variants = sorted({r["variant_label"] for r in cells})
    corpora = sorted({r["corpus"] for r in cells})
    grid = [[float("nan")] * len(corpora) for _ in variants]
    for r in cells:
        i = variants.index(r["variant_label"])
        j = corpora.index(r["corpus"])
        if r.get("rouge_l") is not None:
            grid[i][j] = r["rouge_l"]
    label_width = max(len(v) for v in variants) * 0.085
    fig, ax = plt.subplots(
        figsize=(1.6 + label_width + 1.4 * len(corpora), 1.4 + 0.5 * len(variants)))
    im = ax.imshow(grid, vmin=0, vmax=1, cmap="viridis", aspect="auto")
    ax.set_xticks(range(len(corpora)), corpora, rotation=30, ha="right")
    ax.set_yticks(range(len(variants)), variants)
    for i in range(len(variants)):
        for j in range(len(corpora)):
            value = grid[i][j]
            text = "err" if value != value else f"{value:.2f}"
            ax.text(j, i, text, ha="center", va="center", color="white", fontsize=8)
    fig.colorbar(im, ax=ax, label="mean RL")
    _save(fig, path)


def stats_figure(rows: list[dict], path: Path) -> None:
    """One bar panel per statistic across corpora."""
    stats = [r for r in rows if r["record"] == "stats"]
    if not stats:
        return
    names = [r["corpus"] for r in stats]
    keys = ["utts_per_sample", "words_per_utt", "extraction_ratio"]
    fig, axes = plt.subplots(1, 3, figsize=(9.6, 3.2))
    for ax, key in zip(axes, keys):
        values = [r[key] if r[key] is not None else 0.0 for r in stats]
        ax.bar(names, values)
        ax.set_title(key)
        ax.tick_params(axis="x", rotation=30)
    _save(fig, path)
