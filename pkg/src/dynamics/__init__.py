"""
Numerical complex dynamics: roots, backward orbits, Hausdorff distances,
fixed points and escape-time rasters.
"""

from .point_cloud import DEFAULT_TOL, PointCloud, write_cloud_csv
from .roots import RootSolver, preimages, preimages_many, roots
from .orbit import BackwardOrbit, backward_orbit
from .hausdorff import hausdorff, hausdorff_to_segment
from .fixed_points import FixedPointClass, FixedPointKind, classify_fixed_point, fixed_points
from .raster import PALETTE, Raster, Window, escape_radius, filled_julia_raster, write_raster_ppm
