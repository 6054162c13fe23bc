"""
Escape-time rasters of filled Julia sets, written as binary PPM.
"""

import logging
from dataclasses import dataclass
from typing import BinaryIO, Union

import numpy as np
from PIL import Image

from ..polynomials.intpoly import IntPoly
from ..utils.error_handler import DynamicsError, NumericOverflowError

logger = logging.getLogger('indatt.dynamics.raster')

# Escape count v >= 1 is drawn with PALETTE[(v - 1) % 16]; non-escaping pixels are black
PALETTE = np.array([
    (66, 30, 15), (25, 7, 26), (9, 1, 47), (4, 4, 73),
    (0, 7, 100), (12, 44, 138), (24, 82, 177), (57, 125, 209),
    (134, 181, 229), (211, 236, 248), (241, 233, 191), (248, 201, 95),
    (255, 170, 0), (204, 128, 0), (153, 87, 0), (106, 52, 3),
], dtype=np.uint8)


@dataclass(frozen=True)
class Window:
    """Rectangle [re_min, re_max] x [im_min, im_max] in the complex plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DynamicsError(f"Degenerate window {self}")

    @classmethod
    def parse(cls, text: str) -> "Window":
        """Parse "re_min,re_max,im_min,im_max"."""
        try:
            values = [float(v) for v in text.split(',')]
        except ValueError:
            raise DynamicsError(f"Window must be four comma-separated numbers, got '{text}'")
        if len(values) != 4:
            raise DynamicsError(f"Window must be four comma-separated numbers, got '{text}'")
        return cls(*values)


@dataclass(frozen=True, eq=False)
class Raster:
    """Per-pixel escape counts; row 0 is the top edge (im_max)."""

    width: int
    height: int
    window: Window
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.height, self.width):
            raise DynamicsError(
                f"Raster values have shape {self.values.shape}, expected {(self.height, self.width)}"
            )

    def non_escaping(self) -> np.ndarray:
        return self.values == 0

    def pixel_point(self, row: int, col: int) -> complex:
        re = np.linspace(self.window.re_min, self.window.re_max, self.width)[col]
        im = np.linspace(self.window.im_max, self.window.im_min, self.height)[row]
        return complex(re, im)

    def to_rgb(self) -> np.ndarray:
        rgb = np.zeros((self.height, self.width, 3), dtype=np.uint8)
        escaped = self.values > 0
        rgb[escaped] = PALETTE[(self.values[escaped] - 1) % len(PALETTE)]
        return rgb


def escape_radius(p: IntPoly) -> float:
    """R = max(2, 1 + sum_{i<d} |a_i| / |a_d|); |p(z)| > |z| whenever |z| > R."""
    lead = abs(p.leading)
    try:
        tail = sum(abs(c) for c in p.coeffs[:-1]) / lead
    except OverflowError:
        raise NumericOverflowError("Coefficients too large for an escape radius")
    return max(2.0, 1.0 + tail)


def filled_julia_raster(p: IntPoly, window: Window, width: int, height: int, max_iter: int) -> Raster:
    """
    Escape-time raster: value = first iteration with |z| > R, 0 if none within max_iter.

    Raises:
        DynamicsError: If p has degree < 1 or the size is not positive
    """
    if p.degree < 1:
        raise DynamicsError(f"Raster needs degree >= 1, got {p.degree}")
    if width < 1 or height < 1:
        raise DynamicsError(f"Raster size must be positive, got {width}x{height}")
    radius = escape_radius(p)
    coeffs = [complex(c) for c in p.coeffs]
    re = np.linspace(window.re_min, window.re_max, width)
    im = np.linspace(window.im_max, window.im_min, height)
    z = (re[None, :] + 1j * im[:, None]).ravel()
    values = np.zeros(z.shape, dtype=np.int64)
    alive = np.arange(z.size)
    zs = z.copy()

    for iteration in range(1, max_iter + 1):
        if alive.size == 0:
            break
        acc = np.full(zs.shape, coeffs[-1], dtype=np.complex128)
        for c in coeffs[-2::-1]:
            acc = acc * zs + c
        escaped = np.abs(acc) > radius
        values[alive[escaped]] = iteration
        alive = alive[~escaped]
        zs = acc[~escaped]

    logger.info(f"Raster {width}x{height}: {alive.size} pixels did not escape in {max_iter} iterations")
    return Raster(width, height, window, values.reshape(height, width))


def write_raster_ppm(raster: Raster, target: Union[str, BinaryIO]) -> None:
    """Write a binary PPM (P6) image."""
    Image.fromarray(raster.to_rgb()).save(target, format="PPM")
