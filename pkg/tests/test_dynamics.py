"""
Tests for the dynamics package.
"""

import unittest
import os
import sys
import io
import cmath

import numpy as np

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.dynamics.fixed_points import FixedPointKind, classify_fixed_point, fixed_points
from src.dynamics.hausdorff import hausdorff, hausdorff_to_segment
from src.dynamics.orbit import backward_orbit
from src.dynamics.point_cloud import PointCloud, write_cloud_csv
from src.dynamics.raster import Raster, Window, escape_radius, filled_julia_raster, write_raster_ppm
from src.dynamics.roots import RootSolver, preimages, roots
from src.polynomials.chebyshev import segment_candidate
from src.polynomials.intpoly import IntPoly
from src.utils.error_handler import (
    DynamicsError,
    EmptyCloudError,
    FixedPointError,
    RootSolverError,
)

SQUARE = IntPoly((0, 0, 1))
# Reduced polynomial of 2K2, conjugate to T_2; its Julia set is [-1, 0]
SEGMENT_QUADRATIC = IntPoly((0, 4, 4))


class TestPointCloud(unittest.TestCase):
    """Tests for point clouds."""

    def test_dedupe_and_order(self):
        """Test tolerance dedupe and the (re, im) order."""
        cloud = PointCloud.from_points([1, 0, 1e-12, 1j, -1j])
        self.assertEqual(cloud.as_list(), [-1j, 0, 1j, 1])

    def test_thin(self):
        """Test deterministic thinning."""
        cloud = PointCloud.from_points(range(10))
        thinned = cloud.thin(3)
        self.assertEqual(thinned.as_list(), [0, 4, 8])
        self.assertEqual(thinned.thinned_from, 10)
        self.assertIs(cloud.thin(10), cloud)

    def test_queries(self):
        """Test containment, symmetry and the positive real points."""
        cloud = PointCloud.from_points([1 + 1j, 1 - 1j, 2, -3])
        self.assertTrue(cloud.contains(2 + 1e-10))
        self.assertFalse(cloud.contains(0))
        self.assertTrue(cloud.is_conjugation_symmetric())
        self.assertFalse(PointCloud.from_points([1j]).is_conjugation_symmetric())
        self.assertEqual(list(cloud.positive_real_points()), [2])

    def test_empty(self):
        """Test the empty cloud."""
        cloud = PointCloud.from_points([])
        self.assertEqual(len(cloud), 0)
        with self.assertRaises(EmptyCloudError):
            cloud.require_nonempty()

    def test_csv(self):
        """Test the CSV writer."""
        stream = io.StringIO()
        count = write_cloud_csv(PointCloud.from_points([0.5 - 0.25j]), stream)
        self.assertEqual(count, 1)
        self.assertEqual(stream.getvalue(), "0.5,-0.25\n")


class TestRoots(unittest.TestCase):
    """Tests for the root solver."""

    def test_simple_roots(self):
        """Test the roots of 1 + 4z + 3z^2."""
        cloud = roots(IntPoly((1, 4, 3)))
        self.assertEqual(len(cloud), 2)
        self.assertTrue(cloud.contains(-1, 1e-9))
        self.assertTrue(cloud.contains(-1 / 3, 1e-9))

    def test_multiple_root_merged(self):
        """Test that a triple root collapses to one point."""
        cloud = roots(IntPoly((1, 3, 3, 1)))
        self.assertEqual(len(cloud), 1)
        self.assertAlmostEqual(cloud.as_list()[0], -1, places=9)

    def test_roots_of_unity(self):
        """Test preimages of 1 under z^8."""
        cloud = preimages(IntPoly((0,) * 8 + (1,)), 1)
        self.assertEqual(len(cloud), 8)
        for j in range(8):
            self.assertTrue(cloud.contains(cmath.exp(2j * cmath.pi * j / 8), 1e-9))

    def test_batch_rows_independent(self):
        """Test that a row's roots do not depend on the other rows."""
        solver = RootSolver()
        p = IntPoly((0, 4, 3, 2, 1))
        targets = [0.5, -2 + 1j, 3j]
        batch = solver.solve_batch(p, targets)
        for b, w in enumerate(targets):
            np.testing.assert_allclose(batch[b], solver.solve_batch(p, [w])[0], rtol=0, atol=1e-12)

    def test_degree_zero(self):
        """Test that constants have no roots to solve for."""
        with self.assertRaises(DynamicsError):
            roots(IntPoly((5,)))

    def test_no_convergence(self):
        """Test that an exhausted budget raises with the best iterate."""
        solver = RootSolver(max_iterations=0, polish_steps=0)
        with self.assertRaises(RootSolverError) as ctx:
            solver.roots(IntPoly((1, 4, 3)))
        self.assertEqual(len(ctx.exception.best_iterate), 2)

    def test_close_roots_near_critical_value(self):
        """Test that two close simple roots near a double root are kept apart."""
        # -4 is a critical value of 16z + 20z^2 + 8z^3 + z^4, with double roots at -2 +- sqrt(2)
        batch = RootSolver().solve_batch(segment_candidate(4, 1), [-4 + 6.5e-8])
        cloud = PointCloud.from_points(batch[0], 1e-9)
        self.assertEqual(len(cloud), 4)
        for centre in (-2 - 2 ** 0.5, -2 + 2 ** 0.5):
            near = [z for z in cloud.as_list() if abs(z - centre) < 1e-3]
            self.assertEqual(len(near), 2)
            self.assertTrue(all(abs(z.imag) < 1e-6 for z in near))


class TestBackwardOrbit(unittest.TestCase):
    """Tests for backward orbits."""

    def test_square_orbit(self):
        """Test that level m of z^2 from 1 is the 2^m-th roots of unity."""
        orbit = backward_orbit(SQUARE, seed=1, depth=4)
        self.assertEqual([len(level) for level in orbit], [2, 4, 8, 16])
        for point in orbit.final:
            self.assertAlmostEqual(abs(point), 1.0, places=9)

    def test_threads_do_not_change_result(self):
        """Test that chunked threaded solving gives the same levels."""
        solver = RootSolver(chunk_size=3)
        single = backward_orbit(SEGMENT_QUADRATIC, depth=6, solver=solver, threads=1)
        pooled = backward_orbit(SEGMENT_QUADRATIC, depth=6, solver=solver, threads=3)
        for a, b in zip(single, pooled):
            np.testing.assert_array_equal(a.points, b.points)

    def test_thinning(self):
        """Test that levels above the cap are thinned and recorded."""
        orbit = backward_orbit(SQUARE, seed=1, depth=3, cap=3)
        self.assertEqual(orbit.thinned_levels, [2, 3])
        self.assertLessEqual(len(orbit.final), 3)

    def test_segment_orbit_converges(self):
        """Test that the orbit of -1 fills the segment [-1, 0]."""
        orbit = backward_orbit(SEGMENT_QUADRATIC, seed=-1, depth=10)
        self.assertEqual(len(orbit[1]), 1)
        self.assertLess(hausdorff_to_segment(orbit.final, 1.0), 0.05)
        self.assertLess(hausdorff_to_segment(orbit.final, 1.0), hausdorff_to_segment(orbit[3], 1.0))

    def test_segment_candidates_converge(self):
        """Test that every quartic candidate and the n = 3, k = 4 cubic fill their segments."""
        for n, k in ((4, 1), (4, 2), (4, 3), (4, 4), (3, 4)):
            with self.subTest(n=n, k=k):
                r = 4 / k
                orbit = backward_orbit(segment_candidate(n, k), seed=-1, depth=10)
                distances = [hausdorff_to_segment(orbit[m], r) for m in range(3, 11)]
                for earlier, later in zip(distances, distances[1:]):
                    self.assertLessEqual(later, earlier + r / 1e4)
                self.assertLessEqual(distances[-1], 0.05)

    def test_invalid_arguments(self):
        """Test degree and cap validation."""
        with self.assertRaises(DynamicsError):
            backward_orbit(IntPoly((3,)))
        with self.assertRaises(DynamicsError):
            backward_orbit(SQUARE, cap=0)
        with self.assertRaises(IndexError):
            backward_orbit(SQUARE, seed=1, depth=2)[3]


class TestHausdorff(unittest.TestCase):
    """Tests for Hausdorff distances."""

    def test_points(self):
        """Test distances between small clouds."""
        self.assertAlmostEqual(hausdorff([0], [3 + 4j]), 5.0)
        self.assertAlmostEqual(hausdorff([0, 1], [0]), 1.0)

    def test_segment(self):
        """Test the distance to [-r, 0]."""
        self.assertAlmostEqual(hausdorff_to_segment([-0.5], 1.0), 0.5)
        self.assertAlmostEqual(hausdorff_to_segment([-1, 0, 1j], 1.0), 1.0)
        with self.assertRaises(DynamicsError):
            hausdorff_to_segment([0], 0)

    def test_empty(self):
        """Test that empty clouds raise."""
        with self.assertRaises(EmptyCloudError):
            hausdorff([], [1])
        with self.assertRaises(EmptyCloudError):
            hausdorff_to_segment(PointCloud.from_points([]), 1.0)


class TestFixedPoints(unittest.TestCase):
    """Tests for fixed-point classification."""

    def test_square_fixed_points(self):
        """Test the fixed points 0 and 1 of z^2."""
        cloud = fixed_points(SQUARE)
        self.assertEqual(len(cloud), 2)
        self.assertEqual(classify_fixed_point(SQUARE, 0).kind, FixedPointKind.SUPER_ATTRACTING)
        self.assertEqual(classify_fixed_point(SQUARE, 1).kind, FixedPointKind.REPELLING)

    def test_parabolic(self):
        """Test a multiplier equal to 1."""
        self.assertEqual(classify_fixed_point(IntPoly((0, 1, 1)), 0).kind,
                         FixedPointKind.RATIONALLY_INDIFFERENT)

    def test_not_fixed(self):
        """Test that a non-fixed point raises."""
        with self.assertRaises(FixedPointError):
            classify_fixed_point(SQUARE, 2)


class TestRaster(unittest.TestCase):
    """Tests for escape-time rasters."""

    def test_square_raster(self):
        """Test that the disc does not escape and the corners do."""
        raster = filled_julia_raster(SQUARE, Window(-2, 2, -2, 2), 41, 41, 30)
        self.assertEqual(raster.values[20, 20], 0)
        self.assertEqual(raster.values[0, 0], 1)
        self.assertEqual(raster.pixel_point(0, 0), complex(-2, 2))
        self.assertTrue(raster.non_escaping()[20, 25])

    def test_escape_radius(self):
        """Test the escape radius formula."""
        self.assertEqual(escape_radius(SQUARE), 2.0)
        self.assertEqual(escape_radius(IntPoly((0, 4, 4))), 2.0)
        self.assertEqual(escape_radius(IntPoly((0, 9, 1))), 10.0)

    def test_ppm(self):
        """Test the binary PPM output."""
        raster = filled_julia_raster(SQUARE, Window(-2, 2, -1.5, 1.5), 8, 6, 10)
        stream = io.BytesIO()
        write_raster_ppm(raster, stream)
        data = stream.getvalue()
        self.assertTrue(data.startswith(b"P6"))
        self.assertTrue(data.endswith(raster.to_rgb().tobytes()))

    def test_window(self):
        """Test window parsing and validation."""
        self.assertEqual(Window.parse("-2,1,-1.5,1.5"), Window(-2, 1, -1.5, 1.5))
        for text in ("1,2,3", "a,b,c,d", "1,0,0,1"):
            with self.assertRaises(DynamicsError):
                Window.parse(text)

    def test_invalid_raster(self):
        """Test size, degree and shape validation."""
        with self.assertRaises(DynamicsError):
            filled_julia_raster(SQUARE, Window(-1, 1, -1, 1), 0, 5, 10)
        with self.assertRaises(DynamicsError):
            filled_julia_raster(IntPoly((1,)), Window(-1, 1, -1, 1), 5, 5, 10)
        with self.assertRaises(DynamicsError):
            Raster(2, 2, Window(-1, 1, -1, 1), np.zeros((3, 2)))


if __name__ == '__main__':
    unittest.main()
