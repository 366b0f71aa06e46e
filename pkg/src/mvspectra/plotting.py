"""Hasse diagrams of spectra rendered with matplotlib (headless)."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .spectrum import SpectrumPoset  # noqa: E402


def layout(p: SpectrumPoset) -> list[tuple[float, float]]:
    """Nodes on rows by rank, spread evenly within each row."""
    ranks = [p.rank(i) for i in range(len(p))]
    rows: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        rows.setdefault(r, []).append(i)
    pos = [(0.0, 0.0)] * len(p)
    for r, members in rows.items():
        for j, i in enumerate(members):
            pos[i] = (j - (len(members) - 1) / 2, float(r))
    return pos


def hasse_figure(p: SpectrumPoset, title: str = ""):
    pos = layout(p)
    width = max(3.0, 1.6 * max((sum(1 for q in pos if q[1] == y) for _, y in pos), default=1))
    height = max(2.5, 1.4 * (1 + max((y for _, y in pos), default=0)))
    fig, ax = plt.subplots(figsize=(width, height))
    for i, j in p.covers():
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.4", lw=1.2, zorder=1)
    for (x, y), name in zip(pos, p.names):
        ax.text(x, y, name, ha="center", va="center", fontsize=10, zorder=2,
                bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="0.2"))
    xs = [x for x, _ in pos] or [0.0]
    ys = [y for _, y in pos] or [0.0]
    ax.set_xlim(min(xs) - 0.8, max(xs) + 0.8)
    ax.set_ylim(min(ys) - 0.6, max(ys) + 0.6)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    return fig


def save_hasse(p: SpectrumPoset, path: str, title: str = "") -> None:
    fig = hasse_figure(p, title)
    # dropping timestamps keeps repeated renders byte-identical
    ext = str(path).rsplit(".", 1)[-1].lower()
    meta = {"png": {"Software": None}, "svg": {"Date": None},
            "pdf": {"CreationDate": None}}.get(ext)
    with matplotlib.rc_context({"svg.hashsalt": "mvspectra"}):
        fig.savefig(path, metadata=meta)
    plt.close(fig)
