"""Matplotlib rendering for the CLI report path (opt-in via --plot)."""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_WIDTH = 6.4
# Pin the PNG metadata so rendered figures are byte-stable across runs.
_METADATA = {"Software": "boostosc"}


def _new_axes():
    fig, ax = plt.subplots(figsize=(_WIDTH, _WIDTH * _GOLDEN))
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    return fig, ax


def _save(fig, path):
    fig.savefig(path, dpi=150, bbox_inches="tight", metadata=_METADATA)
    plt.close(fig)


def save_line_figure(path, x, series, xlabel, ylabel, logy=False):
    """One curve per (label, values) entry of ``series`` against x."""
    fig, ax = _new_axes()
    for label, y in series.items():
        ax.plot(x, y, lw=1.2, label=label)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if len(series) > 1:
        ax.legend(frameon=False, fontsize=8)
    _save(fig, path)


def save_heatmap_figure(path, xg, yg, values, xlabel, ylabel, clabel):
    """Filled map of values over the meshgrid (xg, yg)."""
    fig, ax = _new_axes()
    im = ax.pcolormesh(xg, yg, values, shading="auto", cmap="viridis")
    fig.colorbar(im, ax=ax, label=clabel)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_aspect("equal")
    _save(fig, path)


def save_bar_figure(path, positions, heights, xlabel, ylabel):
    """Discrete distribution as a bar chart."""
    fig, ax = _new_axes()
    ax.bar(positions, heights, width=0.8, color="#3b6ea5")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    _save(fig, path)
