"""
Finite sets of complex points with tolerance-based deduplication.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, TextIO

import numpy as np
from scipy.spatial import cKDTree

from ..utils.error_handler import EmptyCloudError

logger = logging.getLogger('indatt.dynamics.point_cloud')

DEFAULT_TOL = 1e-9


def canonical_order(points: np.ndarray) -> np.ndarray:
    """Indices sorting complex points by (re, im)."""
    return np.lexsort((points.imag, points.real))


def as_xy(points: np.ndarray) -> np.ndarray:
    return np.column_stack((points.real, points.imag))


def _dedupe_sorted(points: np.ndarray, tol: float) -> np.ndarray:
    """Greedy dedupe of canonically sorted points: keep a point unless an earlier kept one is within tol."""
    if len(points) < 2:
        return points
    pairs = cKDTree(as_xy(points)).query_pairs(tol, output_type='ndarray')
    if len(pairs) == 0:
        return points
    neighbours = {}
    for i, j in pairs:
        neighbours.setdefault(int(i), []).append(int(j))
        neighbours.setdefault(int(j), []).append(int(i))
    removed = np.zeros(len(points), dtype=bool)
    for i in sorted(neighbours):
        if removed[i]:
            continue
        for j in neighbours[i]:
            if j > i:
                removed[j] = True
    return points[~removed]


@dataclass(frozen=True, eq=False)
class PointCloud:
    """
    Deduplicated complex points in canonical (re, im) order.

    No two stored points are within tol of each other. ``thinned_from`` is
    the size before deterministic thinning, or None if the cloud is complete.
    """

    points: np.ndarray
    tol: float = DEFAULT_TOL
    thinned_from: Optional[int] = field(default=None)

    @classmethod
    def from_points(cls, points: Iterable[complex], tol: float = DEFAULT_TOL) -> "PointCloud":
        arr = np.asarray(list(points) if not isinstance(points, np.ndarray) else points,
                         dtype=np.complex128).ravel()
        arr = arr[canonical_order(arr)]
        return cls(_dedupe_sorted(arr, tol), tol)

    @classmethod
    def single(cls, z: complex, tol: float = DEFAULT_TOL) -> "PointCloud":
        return cls(np.array([complex(z)], dtype=np.complex128), tol)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[complex]:
        return (complex(z) for z in self.points)

    def as_list(self) -> List[complex]:
        return [complex(z) for z in self.points]

    @property
    def is_thinned(self) -> bool:
        return self.thinned_from is not None

    def require_nonempty(self) -> None:
        if len(self.points) == 0:
            raise EmptyCloudError("Point cloud is empty")

    def contains(self, z: complex, tol: Optional[float] = None) -> bool:
        """True iff some stored point lies within tol of z."""
        if len(self.points) == 0:
            return False
        tol = self.tol if tol is None else tol
        return bool(np.min(np.abs(self.points - complex(z))) <= tol)

    def is_conjugation_symmetric(self, tol: Optional[float] = None) -> bool:
        """Every point has a stored point within tol of its conjugate."""
        if len(self.points) == 0:
            return True
        tol = self.tol if tol is None else tol
        distances, _ = cKDTree(as_xy(self.points)).query(as_xy(np.conj(self.points)))
        return bool(np.max(distances) <= tol)

    def positive_real_points(self, tol: Optional[float] = None) -> np.ndarray:
        """Points with |im| <= tol and re > tol."""
        tol = self.tol if tol is None else tol
        mask = (np.abs(self.points.imag) <= tol) & (self.points.real > tol)
        return self.points[mask]

    def thin(self, cap: int) -> "PointCloud":
        """
        Keep every j-th point of the canonical order, j minimal with size <= cap.
        """
        size = len(self.points)
        if size <= cap:
            return self
        step = math.ceil(size / cap)
        logger.info(f"Thinning cloud of {size} points with step {step}")
        return PointCloud(self.points[::step], self.tol, thinned_from=size)


def write_cloud_csv(cloud: PointCloud, stream: TextIO) -> int:
    """Write "re,im" lines with 17 significant digits; returns the line count."""
    for z in cloud.points:
        stream.write(f"{z.real:.17g},{z.imag:.17g}\n")
    return len(cloud)
