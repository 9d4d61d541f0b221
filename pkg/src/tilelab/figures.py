"""PNG figure output for analysis reports, via the Agg backend."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_cloud_png(cloud, path, title: str = "") -> None:
    """Scatter a single point cloud to ``path``."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    pts = cloud.points
    if len(pts):
        ax.scatter(pts[:, 0], pts[:, 1], s=0.4, linewidths=0, color="#1f3a5f")
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=160, bbox_inches="tight")
    plt.close(fig)


def save_pieces_png(named_points, path, title: str = "") -> None:
    """Scatter labeled point arrays in distinct colors with a legend."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    cmap = matplotlib.colormaps["tab10"]
    for k, (name, pts) in enumerate(named_points):
        if len(pts):
            ax.scatter(pts[:, 0], pts[:, 1], s=0.8, linewidths=0,
                       color=cmap(k % 10), label=name)
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    if named_points:
        ax.legend(loc="upper right", fontsize="small", markerscale=8)
    fig.savefig(path, dpi=160, bbox_inches="tight")
    plt.close(fig)
