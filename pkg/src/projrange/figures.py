"""SVG figures: the nested ellipses E(0.1), ..., E(0.9) and the region
covered by all E(λ), λ in [0, 1]."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .ellipse import TWO_PI, boundary_point, full_region_support_point

SAMPLES = 720
ELLIPSE_LAMBDAS = tuple(round(0.1 * k, 1) for k in range(1, 10))

_SCALE = 400.0
_ORIGIN = (80.0, 160.0)
_SIZE = (560, 320)


def ellipse_path(lam: float, samples: int = SAMPLES) -> np.ndarray:
    t = TWO_PI * np.arange(samples) / samples
    return boundary_point(lam, t)


def full_region_path(samples: int = SAMPLES) -> np.ndarray:
    alphas = TWO_PI * np.arange(samples) / samples
    return full_region_support_point(alphas)


def _svg_path(points: np.ndarray) -> str:
    x = _ORIGIN[0] + _SCALE * points.real
    y = _ORIGIN[1] - _SCALE * points.imag
    coords = [f"{a:.4f},{b:.4f}" for a, b in zip(x, y)]
    return "M " + " L ".join(coords) + " Z"


def _document(paths: list[tuple[str, np.ndarray]], title: str) -> str:
    w, h = _SIZE
    x0, y0 = _ORIGIN
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"  <title>{title}</title>",
        f'  <line x1="0" y1="{y0:.4f}" x2="{w}" y2="{y0:.4f}" stroke="#999" stroke-width="0.5"/>',
        f'  <line x1="{x0:.4f}" y1="0" x2="{x0:.4f}" y2="{h}" stroke="#999" stroke-width="0.5"/>',
    ]
    for name, pts in paths:
        lines.append(f'  <path id="{name}" d="{_svg_path(pts)}" fill="none" stroke="black" '
                     f'stroke-width="1"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def ellipses_svg() -> str:
    paths = [(f"ellipse-{lam:.1f}", ellipse_path(lam)) for lam in ELLIPSE_LAMBDAS]
    return _document(paths, "Ellipses E(lambda), lambda = 0.1, ..., 0.9")


def full_region_svg() -> str:
    return _document([("full-region", full_region_path())], "Convex hull of all E(lambda)")


def write_figures(out_dir) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = [(out / "ellipses.svg", ellipses_svg()), (out / "full_region.svg", full_region_svg())]
    for path, text in files:
        path.write_text(text, encoding="utf-8")
    return [p for p, _ in files]
