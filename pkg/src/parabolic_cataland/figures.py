"""Matplotlib renderings written next to the delimited reports.

Hasse diagrams are laid out by rank layers (longest path from the bottom);
verification sweeps render as a status matrix with one row per composition
and one column per check.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .posets import FinitePoset  # noqa: E402

_STATUS_COLOUR = {"pass": "#2a9d4e", "fail": "#d42f2f", "skip": "#b9b9b9"}


def hasse_figure(poset: FinitePoset, path: str, label_fn=str,
                 title: str = "") -> None:
    """Draw the Hasse diagram bottom-to-top and save it to ``path``."""
    n = poset.n
    depth = [0] * n
    for v in poset.topo_order():
        lows = poset.lower_covers(v)
        if lows:
            depth[v] = 1 + max(depth[u] for u in lows)
    layers: dict = {}
    for v in range(n):
        layers.setdefault(depth[v], []).append(v)
    pos = {}
    for d, members in layers.items():
        width = len(members)
        for k, v in enumerate(sorted(members)):
            pos[v] = (k - (width - 1) / 2.0, d)

    fig_w = max(4.0, 1.2 * max(len(m) for m in layers.values()))
    fig_h = max(3.0, 0.9 * (len(layers) + 1))
    fig, ax = plt.subplots(figsize=(min(fig_w, 18), min(fig_h, 14)))
    for a, b in poset.covers:
        ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]],
                color="#777777", lw=0.8, zorder=1)
    for v in range(n):
        ax.text(pos[v][0], pos[v][1], label_fn(poset.labels[v]),
                ha="center", va="center", fontsize=7, zorder=2,
                bbox={"boxstyle": "round,pad=0.25", "fc": "#f2f2f2",
                      "ec": "#444444", "lw": 0.6})
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def digraph_figure(names, edges, path: str, title: str = "") -> None:
    """Circular layout for a small directed graph (the Galois graph)."""
    import math

    n = len(names)
    fig, ax = plt.subplots(figsize=(6, 6))
    pts = []
    for k in range(n):
        ang = 2 * math.pi * k / max(n, 1)
        pts.append((math.cos(ang), math.sin(ang)))
    for s, t in sorted(edges):
        x1, y1 = pts[s - 1]
        x2, y2 = pts[t - 1]
        ax.annotate("", xy=(x2, y2), xytext=(x1, y1),
                    arrowprops={"arrowstyle": "-|>", "color": "#555555",
                                "lw": 0.8, "shrinkA": 14, "shrinkB": 14})
    for (x, y), name in zip(pts, names):
        ax.text(x, y, name, ha="center", va="center", fontsize=8,
                bbox={"boxstyle": "round,pad=0.3", "fc": "#eef3ff",
                      "ec": "#333333", "lw": 0.6})
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def report_figure(rows, path: str, title: str = "") -> None:
    """Status matrix for a sweep: one row per composition, column per check.

    ``rows`` is a list of ``(alpha_text, {check_name: status})``.
    """
    checks = sorted({name for _alpha, res in rows for name in res})
    fig_h = max(2.5, 0.28 * len(rows) + 1.2)
    fig_w = max(4.0, 0.75 * len(checks) + 2.0)
    fig, ax = plt.subplots(figsize=(min(fig_w, 16), min(fig_h, 20)))
    for r, (alpha_text, res) in enumerate(rows):
        for c, name in enumerate(checks):
            status = res.get(name)
            if status is None:
                continue
            colour = _STATUS_COLOUR.get(status, "#dddddd")
            ax.add_patch(plt.Rectangle((c, len(rows) - 1 - r), 0.92, 0.92,
                                       color=colour))
    ax.set_xticks([c + 0.45 for c in range(len(checks))])
    ax.set_xticklabels(checks, rotation=45, ha="right", fontsize=7)
    ax.set_yticks([len(rows) - 1 - r + 0.45 for r in range(len(rows))])
    ax.set_yticklabels([alpha for alpha, _res in rows], fontsize=7)
    ax.set_xlim(0, max(len(checks), 1))
    ax.set_ylim(0, max(len(rows), 1))
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
