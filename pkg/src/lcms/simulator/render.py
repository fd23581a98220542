"""Orthographic top-down rasterizer for tabletop scenes.

Deliberately crude: hard-edged shapes, no anti-aliasing, no lighting, so a
pixel either carries an object's palette color or the background.  Pixel
centers are tested against the analytic footprints, which keeps the image
and success geometry consistent.
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image as PILImage

from .scene import BOWL_RADIUS, CUBE_EDGE, Scene

PALETTE = {
    "red": (0.85, 0.10, 0.10),
    "green": (0.10, 0.65, 0.15),
    "blue": (0.15, 0.25, 0.85),
    "yellow": (0.90, 0.85, 0.10),
    "pink": (0.95, 0.50, 0.75),
}
BACKGROUND = (0.80, 0.80, 0.78)
CUBE_COLOR = (0.35, 0.35, 0.35)


def table_to_pixel(x: float, y: float, scene: Scene, h: int, w: int) -> tuple[float, float]:
    """Table coords (m) -> continuous pixel coords (row, col)."""
    col = (x + scene.table_w / 2) / scene.table_w * w - 0.5
    row = (scene.table_h - y) / scene.table_h * h - 0.5
    return row, col


def _pixel_centers(scene: Scene, h: int, w: int):
    xs = (np.arange(w) + 0.5) / w * scene.table_w - scene.table_w / 2
    ys = scene.table_h - (np.arange(h) + 0.5) / h * scene.table_h
    return np.meshgrid(xs, ys)  # each (h, w)


def render(scene: Scene, h: int = 64, w: int = 64) -> np.ndarray:
    """Render a scene to an (h, w, 3) float image in [0, 1]."""
    img = np.empty((h, w, 3))
    img[:] = BACKGROUND
    px, py = _pixel_centers(scene, h, w)
    for bowl in scene.bowls:
        r = BOWL_RADIUS[bowl.size]
        if bowl.shape == "round":
            mask = (px - bowl.x) ** 2 + (py - bowl.y) ** 2 <= r**2
        else:
            mask = (np.abs(px - bowl.x) <= r) & (np.abs(py - bowl.y) <= r)
        img[mask] = PALETTE[bowl.color]
    cx, cy = scene.cube_xy
    half = CUBE_EDGE / 2
    mask = (np.abs(px - cx) <= half) & (np.abs(py - cy) <= half)
    img[mask] = CUBE_COLOR
    return img


def image_to_png(img: np.ndarray) -> bytes:
    """Encode a float image as 8-bit RGB PNG bytes."""
    arr = np.clip(np.round(img * 255.0), 0, 255).astype(np.uint8)
    buf = io.BytesIO()
    PILImage.fromarray(arr, mode="RGB").save(buf, format="PNG")
    return buf.getvalue()


def png_to_image(data: bytes) -> np.ndarray:
    arr = np.asarray(PILImage.open(io.BytesIO(data)).convert("RGB"), dtype=np.float64)
    return arr / 255.0
