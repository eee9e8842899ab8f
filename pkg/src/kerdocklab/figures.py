"""Matplotlib renderings for the report path.

Figures are written next to the JSON output and never shown interactively;
the Agg backend keeps this usable in headless runs.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

_STATUS_COLORS = {"pass": "#2a9d34", "fail": "#c1121f", "skipped": "#9a9a9a"}


def weight_distribution_figure(weight_distribution: dict[int, int], title: str,
                               path: str | Path) -> Path:
    """Log-scale bar chart of a weight -> count map."""
    path = Path(path)
    weights = sorted(int(w) for w in weight_distribution)
    counts = [weight_distribution[w] if w in weight_distribution
              else weight_distribution[str(w)] for w in weights]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar(weights, counts, width=0.8, color="#33658a")
    ax.set_yscale("log")
    ax.set_xlabel("weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    for w, c in zip(weights, counts):
        ax.annotate(str(c), (w, c), ha="center", va="bottom", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def claim_summary_figure(report: dict, path: str | Path) -> Path:
    """Horizontal runtime bars for every claim, colored by status."""
    path = Path(path)
    claims = report["claims"]
    names = [c["id"] for c in claims]
    runtimes = [max(c["runtime_ms"], 0.01) for c in claims]
    colors = [_STATUS_COLORS["skipped" if c["status"].startswith("skipped")
                             else c["status"]] for c in claims]
    fig, ax = plt.subplots(figsize=(8, 0.24 * len(claims) + 1.2))
    ypos = range(len(claims))
    ax.barh(ypos, runtimes, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=6)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("runtime (ms)")
    summary = report["summary"]
    ax.set_title(f"claims: {summary['pass']} pass / {summary['fail']} fail / "
                 f"{summary['skipped']} skipped ({report['effort']} effort)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report_figures(report: dict, outdir: str | Path) -> list[Path]:
    """Write the claim summary plus one chart per weight-distribution claim."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [claim_summary_figure(report, outdir / "claims.png")]
    for claim in report["claims"]:
        if "weight-distribution" not in claim["id"] or claim["computed"] is None:
            continue
        wd = {int(k): int(v) for k, v in claim["computed"].items()}
        written.append(weight_distribution_figure(
            wd, claim["id"], outdir / f"{claim['id']}.png"))
    return written
