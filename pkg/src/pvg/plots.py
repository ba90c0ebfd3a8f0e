"""Matplotlib rendering for the grid dominating-set bounds table."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .grid import BoundRow


def render_bounds_figure(rows: list[BoundRow], path: str) -> None:
    """Plot f(n) against the asymptotic bounds and save to `path`."""
    ns = [r.n for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, [r.f_n for r in rows], "o-", label="f(n)")
    ax.plot(ns, [r.upper for r in rows], "-", color="tab:red",
            label="4 ln n (upper)")
    lower = [(r.n, r.lower) for r in rows if not math.isnan(r.lower)]
    if lower:
        ax.plot([n for n, _ in lower], [v for _, v in lower], "--",
                color="tab:green", label="ln n / (2 ln ln n) (lower, asymptotic)")
    ax.set_xlabel("n")
    ax.set_ylabel("dominating-set size")
    ax.set_title("Minimum dominating sets of n x n grid visibility graphs")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
