"""
Backward orbits P^{-m}(seed).

Level m is the deduplicated set of preimages of every level-(m-1) point.
Preimage solving inside a level is split into chunks that may run on a
thread pool; the level merge (dedupe + canonical sort) makes the result
independent of the thread count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

import numpy as np

from .point_cloud import DEFAULT_TOL, PointCloud
from .roots import RootSolver
from ..polynomials.intpoly import IntPoly
from ..utils.error_handler import DynamicsError, RootSolverError

logger = logging.getLogger('indatt.dynamics.orbit')


@dataclass
class BackwardOrbit:
    """Levels 1..depth of a backward orbit."""

    poly: IntPoly
    seed: complex
    levels: List[PointCloud] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[PointCloud]:
        return iter(self.levels)

    def __getitem__(self, m: int) -> PointCloud:
        """Level m, 1-based."""
        if not 1 <= m <= len(self.levels):
            raise IndexError(f"Level {m} outside 1..{len(self.levels)}")
        return self.levels[m - 1]

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def final(self) -> PointCloud:
        return self.levels[-1]

    @property
    def thinned_levels(self) -> List[int]:
        return [m for m, cloud in enumerate(self.levels, start=1) if cloud.is_thinned]


def _solve_level(solver: RootSolver, p: IntPoly, points: np.ndarray, threads: int) -> np.ndarray:
    chunk = solver.chunk_size
    chunks = [points[i:i + chunk] for i in range(0, len(points), chunk)]
    if threads <= 1 or len(chunks) <= 1:
        results = [solver.preimages_many(p, c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: solver.preimages_many(p, c), chunks))
    if not results:
        return np.empty(0, dtype=np.complex128)
    return np.concatenate(results)


def backward_orbit(p: IntPoly, seed: complex = -1, depth: int = 12, cap: int = 200000,
                   tol: float = DEFAULT_TOL, threads: int = 1,
                   solver: Optional[RootSolver] = None) -> BackwardOrbit:
    """
    Iterated preimages of seed under p.

    Args:
        p: Polynomial of degree >= 1
        seed: Starting point (default -1)
        depth: Number of levels
        cap: Largest level size; bigger levels are thinned deterministically
        tol: Dedupe tolerance
        threads: Worker threads for per-level preimage solving
        solver: Root solver (default settings if omitted)

    Returns:
        BackwardOrbit: One cloud per level 1..depth

    Raises:
        DynamicsError: If p has degree < 1 or cap < 1
        RootSolverError: With the failing level in its details
    """
    if p.degree < 1:
        raise DynamicsError(f"Backward orbit needs degree >= 1, got {p.degree}")
    if cap < 1:
        raise DynamicsError(f"Point cap must be positive, got {cap}")
    solver = solver or RootSolver(residual_tol=tol)
    orbit = BackwardOrbit(poly=p, seed=complex(seed))
    current = PointCloud.single(seed, tol)

    for m in range(1, depth + 1):
        try:
            raw = _solve_level(solver, p, current.points, threads)
        except RootSolverError as e:
            e.details["level"] = m
            e.message = f"Level {m}: {e.message}"
            raise
        cloud = PointCloud.from_points(raw, tol).thin(cap)
        note = f" (thinned from {cloud.thinned_from})" if cloud.is_thinned else ""
        logger.info(f"Level {m}/{depth}: {len(cloud)} points{note}")
        orbit.levels.append(cloud)
        current = cloud
    return orbit
