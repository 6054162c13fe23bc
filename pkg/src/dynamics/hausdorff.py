"""
Hausdorff distances between point clouds, and to the segment [-r, 0].
"""

import logging
from typing import Union

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff

from .point_cloud import PointCloud, as_xy
from ..utils.error_handler import DynamicsError, EmptyCloudError

logger = logging.getLogger('indatt.dynamics.hausdorff')

SEGMENT_SAMPLES = 10 ** 4

CloudLike = Union[PointCloud, np.ndarray, list]


def _points(cloud: CloudLike) -> np.ndarray:
    points = cloud.points if isinstance(cloud, PointCloud) else np.asarray(cloud, dtype=np.complex128).ravel()
    if len(points) == 0:
        raise EmptyCloudError("Hausdorff distance of an empty point cloud")
    return points


def directed_distance(a: CloudLike, b: CloudLike) -> float:
    """max over a of the distance to the nearest point of b."""
    return float(directed_hausdorff(as_xy(_points(a)), as_xy(_points(b)), seed=0)[0])


def hausdorff(a: CloudLike, b: CloudLike) -> float:
    """
    Symmetric Hausdorff distance.

    Raises:
        EmptyCloudError: If either cloud is empty
    """
    return max(directed_distance(a, b), directed_distance(b, a))


def distance_to_segment(points: np.ndarray, r: float) -> np.ndarray:
    """Exact distances from points to the real segment [-r, 0]."""
    nearest = np.clip(points.real, -r, 0.0)
    return np.abs(points - nearest)


def hausdorff_to_segment(cloud: CloudLike, r: float) -> float:
    """
    Hausdorff distance between the cloud and [-r, 0].

    Cloud to segment is exact; segment to cloud samples the segment at
    spacing r / 10^4, so the result can exceed the true value by r / 10^4.

    Raises:
        EmptyCloudError: If the cloud is empty
        DynamicsError: If r is not positive
    """
    if r <= 0:
        raise DynamicsError(f"Segment length must be positive, got {r}")
    points = _points(cloud)
    to_segment = float(np.max(distance_to_segment(points, r)))
    samples = np.linspace(-r, 0.0, SEGMENT_SAMPLES + 1)
    distances, _ = cKDTree(as_xy(points)).query(np.column_stack((samples, np.zeros_like(samples))))
    from_segment = float(np.max(distances))
    return max(to_segment, from_segment)
