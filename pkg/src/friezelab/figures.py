"""Matplotlib renderings of detection results, saved to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .detect import SymmetryReport
from .image import Image


def save_detection_figure(img: Image, report: SymmetryReport, path: str) -> None:
    """Annotate the strip with detected centers and axes and save it.

    Rotation centers are drawn as dots on the strip axis, mirror axes as
    vertical lines; both families are replicated at their half-period
    spacing across the image.
    """
    w, h = img.width, img.height
    fig, ax = plt.subplots(figsize=(max(4, w / 50), max(2, h / 50 + 1)))
    ax.imshow(img.pixels, cmap="gray", vmin=0, vmax=255, interpolation="nearest")
    half = report.period_px / 2
    if report.rot_center_px is not None:
        c = float(report.rot_center_px)
        xs = []
        x = c % half
        while x < w:
            xs.append(x)
            x += half
        ax.plot(xs, [(h - 1) / 2] * len(xs), "o", color="tab:blue", label="half-turn centers")
    if report.mirror_axis_px is not None:
        c = float(report.mirror_axis_px)
        x = c % half
        first = True
        while x < w:
            ax.axvline(x, color="tab:red", lw=1,
                       label="mirror axes" if first else None)
            first = False
            x += half
    title = f"{report.tag.crystallographic} {report.tag.bracket} period={report.period_px}px"
    if report.glide_phase != "none":
        title += f" glide={report.glide_phase}"
    ax.set_title(title)
    ax.set_yticks([])
    if report.rot_center_px is not None or report.mirror_axis_px is not None:
        ax.legend(loc="upper right", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
