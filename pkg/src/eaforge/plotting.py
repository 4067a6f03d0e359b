"""Figures for tables and hull families, written next to the data files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (4.5, 3.2),
    "savefig.dpi": 150,
}


def figure_path(data_path: str | Path, suffix: str = ".png") -> Path:
    """foo.csv -> foo.png in the same directory."""
    return Path(data_path).with_suffix(suffix)


def rate_plot(rows: Sequence, path: str | Path, title: str = "") -> Path:
    """Rate k/n against net rate (k-c)/n, MDS rows filled."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        for mds, marker, label in ((True, "o", "MDS"), (False, "x", "non-MDS")):
            pts = [(r.k / r.n, (r.k - r.c) / r.n) for r in rows if r.mds == mds]
            if pts:
                xs, ys = zip(*pts)
                ax.scatter(xs, ys, marker=marker, s=16, label=label)
        ax.axhline(0, color="0.6", lw=0.6)
        ax.set_xlabel("rate k/n")
        ax.set_ylabel("net rate (k-c)/n")
        if title:
            ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def hull_plot(family: dict, path: str | Path, title: str = "") -> Path:
    """Hermitian hull dimension against k, with the prediction marked where it fails."""
    rows = family["rows"]
    ks = [r["k"] for r in rows]
    hs = [r["hull_intersection"] for r in rows]
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        ax.step(ks, hs, where="mid", lw=1.0, label="hull dimension")
        miss = [(r["k"], r["hull_intersection"]) for r in rows if r.get("prediction_match") is False]
        if miss:
            xs, ys = zip(*miss)
            ax.scatter(xs, ys, marker="x", color="C3", s=18, label="recursion disagrees")
        ax.set_xlabel("k")
        ax.set_ylabel("dim hull")
        ax.set_xlim(-0.5, family["n"] + 0.5)
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
        if title:
            ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return Path(path)
