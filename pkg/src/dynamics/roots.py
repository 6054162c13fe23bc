"""
Simultaneous (Aberth-Ehrlich) polynomial root solving.

Preimage solving is batched: the rows P(z) - w_b share every coefficient
except the constant term. Each root is frozen as soon as it converges, so
the result for a row does not depend on the other rows in the batch.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from .point_cloud import DEFAULT_TOL, PointCloud
from ..polynomials.intpoly import IntPoly
from ..utils.error_handler import DynamicsError, NumericOverflowError, RootSolverError

logger = logging.getLogger('indatt.dynamics.roots')

EPS = np.finfo(float).eps
ANGLE_OFFSET = 0.4
CLUSTER_RADIUS = 1e-3
MULTIPLE_ROOT_TOL = 1e-10


def _float_coefficients(p: IntPoly) -> np.ndarray:
    try:
        coeffs = np.array([float(c) for c in p.coeffs], dtype=np.complex128)
    except OverflowError:
        raise NumericOverflowError(f"Coefficients of degree-{p.degree} polynomial exceed double range")
    return coeffs


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def _derivative_coefficients(coeffs: np.ndarray, order: int) -> np.ndarray:
    d = len(coeffs) - 1
    return np.array([coeffs[i + order] * math.perm(i + order, order) for i in range(d - order + 1)],
                    dtype=coeffs.dtype)


class RootSolver:
    """Batched Aberth iteration with Newton polish and multiple-root merging."""

    def __init__(self, root_tol: float = 1e-12, max_iterations: int = 500,
                 polish_steps: int = 2, residual_tol: float = DEFAULT_TOL,
                 chunk_size: int = 4096):
        """
        Initialize the solver.

        Args:
            root_tol: Relative step size at which a root counts as converged
            max_iterations: Aberth iteration budget
            polish_steps: Newton steps applied after the iteration
            residual_tol: Accept a root r only if |p(r)| <= residual_tol * (1 + sum |a_i|)
            chunk_size: Rows solved per vectorized batch
        """
        self.root_tol = root_tol
        self.max_iterations = max_iterations
        self.polish_steps = polish_steps
        self.residual_tol = residual_tol
        self.chunk_size = chunk_size

    @classmethod
    def from_config(cls, dynamics: dict, residual_tol: Optional[float] = None) -> "RootSolver":
        return cls(
            root_tol=dynamics["root_tol"],
            max_iterations=dynamics["max_iterations"],
            polish_steps=dynamics["polish_steps"],
            residual_tol=residual_tol if residual_tol is not None else dynamics["tol"],
        )

    def solve_batch(self, p: IntPoly, targets: Sequence[complex]) -> np.ndarray:
        """
        All roots of p(z) - w for each target w.

        Returns:
            np.ndarray: Shape (len(targets), degree); row b holds the roots for targets[b]

        Raises:
            DynamicsError: If p has degree < 1
            RootSolverError: If some root fails the residual check
        """
        if p.degree < 1:
            raise DynamicsError(f"Root solving needs degree >= 1, got {p.degree}")
        a = _float_coefficients(p)
        w = np.asarray(targets, dtype=np.complex128).ravel()
        if len(w) == 0:
            return np.empty((0, p.degree), dtype=np.complex128)
        out = []
        for start in range(0, len(w), self.chunk_size):
            out.append(self._solve_chunk(a, w[start:start + self.chunk_size]))
        return np.vstack(out)

    def _solve_chunk(self, a: np.ndarray, w: np.ndarray) -> np.ndarray:
        d = len(a) - 1
        if d == 1:
            z = ((w - a[0]) / a[1])[:, None]
        else:
            z = self._aberth(a, w)
            z = self._polish(a, w, z)
            z = self._merge_multiple_roots(a, w, z)
        self._check_residuals(a, w, z)
        return z

    def _abs_sum(self, a: np.ndarray, w: np.ndarray, z: np.ndarray) -> np.ndarray:
        """sum |a_i| |z|^i for the rows p - w."""
        abs_a = np.abs(a)
        total = _horner(abs_a.astype(np.complex128), np.abs(z).astype(np.complex128)).real
        return total - abs_a[0] + np.abs(a[0] - w)[:, None]

    def _initial_guesses(self, a: np.ndarray, w: np.ndarray) -> np.ndarray:
        d = len(a) - 1
        lead = abs(a[-1])
        centre = -a[d - 1] / (d * a[-1])
        shared = max([(abs(a[i]) / lead) ** (1.0 / (d - i)) for i in range(1, d)] + [0.0])
        constant = (np.abs(a[0] - w) / lead) ** (1.0 / d)
        radius = np.maximum(shared, constant)
        radius = np.where(radius > 0, radius, 1.0)
        angles = 2 * np.pi * np.arange(d) / d + ANGLE_OFFSET
        return centre + radius[:, None] * np.exp(1j * angles)[None, :]

    def _aberth(self, a: np.ndarray, w: np.ndarray) -> np.ndarray:
        d = len(a) - 1
        da = _derivative_coefficients(a, 1)
        z = self._initial_guesses(a, w)
        active = np.ones(z.shape, dtype=bool)
        diagonal = np.arange(d)

        for iteration in range(self.max_iterations):
            rows = np.flatnonzero(active.any(axis=1))
            if len(rows) == 0:
                logger.debug(f"Aberth converged after {iteration} iterations")
                break
            zs = z[rows]
            ws = w[rows]
            with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
                pv = _horner(a, zs) - ws[:, None]
                dpv = _horner(da, zs)
                diff = zs[:, :, None] - zs[:, None, :]
                diff[:, diagonal, diagonal] = 1.0
                s = (1.0 / diff).sum(axis=2) - 1.0
                ratio = np.where(dpv != 0, pv / np.where(dpv != 0, dpv, 1), pv)
                delta = ratio / (1 - ratio * s)
            stuck = ~np.isfinite(delta)
            if stuck.any():
                delta[stuck] = 1e-6 * (1 + np.abs(zs[stuck]))
            act = active[rows]
            zs_new = np.where(act, zs - delta, zs)
            with np.errstate(over='ignore', invalid='ignore'):
                residual = np.abs(_horner(a, zs_new) - ws[:, None])
                bound = 4 * EPS * d * self._abs_sum(a, ws, zs_new)
            converged = (np.abs(delta) <= self.root_tol * (1 + np.abs(zs_new))) | (residual <= bound)
            active[rows] = act & ~converged
            z[rows] = zs_new
        else:
            logger.debug(f"Aberth budget of {self.max_iterations} iterations exhausted "
                         f"with {int(active.sum())} roots unconverged")
        return z

    def _polish(self, a: np.ndarray, w: np.ndarray, z: np.ndarray) -> np.ndarray:
        da = _derivative_coefficients(a, 1)
        for _ in range(self.polish_steps):
            with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
                pv = _horner(a, z) - w[:, None]
                dpv = _horner(da, z)
                candidate = z - pv / dpv
                improved = np.abs(_horner(a, candidate) - w[:, None]) < np.abs(pv)
            accept = improved & np.isfinite(candidate)
            z = np.where(accept, candidate, z)
        return z

    def _residual_limits(self, a: np.ndarray, w: np.ndarray) -> np.ndarray:
        return self.residual_tol * (1 + np.abs(a[1:]).sum() + np.abs(a[0] - w))

    def _merge_multiple_roots(self, a: np.ndarray, w: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Collapse clusters that approximate one multiple root onto that root."""
        d = z.shape[1]
        limits = self._residual_limits(a, w)
        diff = np.abs(z[:, :, None] - z[:, None, :])
        diff[:, np.arange(d), np.arange(d)] = np.inf
        radius = CLUSTER_RADIUS * (1 + np.abs(z))
        close_rows = np.flatnonzero((diff <= radius[:, :, None]).any(axis=(1, 2)))
        for b in close_rows:
            row_coeffs = a.copy()
            row_coeffs[0] -= w[b]
            z[b] = self._merge_row(row_coeffs, z[b], float(limits[b]))
        return z

    def _merge_row(self, q: np.ndarray, roots: np.ndarray, limit: float) -> np.ndarray:
        """
        Snap each cluster of nearby roots onto one multiple root.

        A cluster is kept as separate roots when the refined centre is not a
        multiple root or its residual |q(c)| exceeds limit: near a critical
        value two distinct simple roots can sit inside CLUSTER_RADIUS.
        """
        d = len(roots)
        parent = list(range(d))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(d):
            for j in range(i + 1, d):
                if abs(roots[i] - roots[j]) <= CLUSTER_RADIUS * (1 + abs(roots[i])):
                    parent[find(j)] = find(i)
        clusters = {}
        for i in range(d):
            clusters.setdefault(find(i), []).append(i)

        roots = roots.copy()
        for members in clusters.values():
            k = len(members)
            if k < 2:
                continue
            centre = self._refine_multiple_root(q, complex(np.mean(roots[members])), k)
            if centre is None:
                continue
            if abs(complex(_horner(q, np.array([centre]))[0])) > limit:
                logger.debug(f"Kept {k} close roots near {centre:.6g} apart: centre residual above {limit:.3e}")
                continue
            roots[members] = centre
        return roots

    def _refine_multiple_root(self, q: np.ndarray, start: complex, k: int) -> Optional[complex]:
        """Newton on q^(k-1) from start; the result is accepted only if q^(j) vanishes there for j < k - 1."""
        top = _derivative_coefficients(q, k - 1)
        slope = _derivative_coefficients(top, 1)
        c = start
        for _ in range(20):
            value = complex(_horner(top, np.array([c]))[0])
            derivative = complex(_horner(slope, np.array([c]))[0])
            if derivative == 0:
                break
            step = value / derivative
            c -= step
            if abs(step) <= EPS * (1 + abs(c)):
                break
        abs_q = np.abs(q)
        for j in range(k - 1):
            dj = _derivative_coefficients(q, j)
            value = abs(complex(_horner(dj, np.array([c]))[0])) / math.factorial(j)
            scale = sum(abs_q[i] * math.comb(i, j) * abs(c) ** (i - j) for i in range(j, len(q)))
            if value > MULTIPLE_ROOT_TOL * scale:
                return None
        return c

    def _check_residuals(self, a: np.ndarray, w: np.ndarray, z: np.ndarray) -> None:
        with np.errstate(over='ignore', invalid='ignore'):
            residual = np.abs(_horner(a, z) - w[:, None])
        limit = self._residual_limits(a, w)
        bad = ~(residual <= limit[:, None])
        if bad.any():
            b = int(np.flatnonzero(bad.any(axis=1))[0])
            raise RootSolverError(
                f"Root solver did not converge for target {complex(w[b])}: "
                f"residual {float(np.max(residual[b])):.3e} exceeds {float(limit[b]):.3e}",
                best_iterate=[complex(x) for x in z[b]],
                details={"target": complex(w[b]), "residual": float(np.max(residual[b]))},
            )

    def roots(self, p: IntPoly, tol: float = DEFAULT_TOL) -> PointCloud:
        """Distinct roots of p as a deduplicated cloud."""
        return PointCloud.from_points(self.solve_batch(p, [0j])[0], tol)

    def preimages(self, p: IntPoly, w: complex, tol: float = DEFAULT_TOL) -> PointCloud:
        """Solutions of p(z) = w."""
        return PointCloud.from_points(self.solve_batch(p, [w])[0], tol)

    def preimages_many(self, p: IntPoly, targets: Sequence[complex]) -> np.ndarray:
        """Every solution of p(z) = w over all targets, flattened (not deduplicated)."""
        return self.solve_batch(p, targets).ravel()


_default_solver = RootSolver()


def roots(p: IntPoly, tol: float = DEFAULT_TOL) -> PointCloud:
    return RootSolver(residual_tol=tol).roots(p, tol)


def preimages(p: IntPoly, w: complex, tol: float = DEFAULT_TOL) -> PointCloud:
    return RootSolver(residual_tol=tol).preimages(p, w, tol)


def preimages_many(p: IntPoly, targets: Sequence[complex], solver: Optional[RootSolver] = None) -> np.ndarray:
    return (solver or _default_solver).preimages_many(p, targets)
