"""
Dynamics subcommands: attractor, julia.
"""

import argparse
import logging
from typing import Optional, TextIO

from .base_command import Command
from ..dynamics.orbit import backward_orbit
from ..dynamics.point_cloud import write_cloud_csv
from ..dynamics.raster import Window, escape_radius, filled_julia_raster, write_raster_ppm
from ..dynamics.roots import RootSolver
from ..graphs.counting import independence_polynomial
from ..polynomials.intpoly import IntPoly, reduced
from ..utils.error_handler import ConfigError, DynamicsError

logger = logging.getLogger('indatt.commands.dynamics')


def _reduced_poly(command: Command, args: argparse.Namespace) -> IntPoly:
    """P_G for a graph argument, or the --poly polynomial as given."""
    if args.poly is not None:
        return command.read_poly(args.poly)
    if args.graph is None:
        raise ConfigError("Give a graph6 string or --poly")
    return reduced(independence_polynomial(command.read_graph(args.graph)))


def _window_arg(text: str) -> Window:
    try:
        return Window.parse(text)
    except DynamicsError as e:
        raise argparse.ArgumentTypeError(e.message)


class AttractorCommand(Command):
    name = "attractor"
    help = "Backward orbit of -1 under P_G, written as re,im CSV"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", nargs="?", help="graph6 string")
        parser.add_argument("--poly", help="iterate this polynomial instead of P_G")
        parser.add_argument("--depth", type=int, help="number of preimage levels")
        parser.add_argument("--cap", type=int, help="largest level size before thinning")
        parser.add_argument("--tol", type=float, help="dedupe tolerance")
        parser.add_argument("--seed", type=complex, default=-1, help="starting point (default -1)")
        parser.add_argument("--out", help="CSV file (default stdout)")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        p = _reduced_poly(self, args)
        config = self.cli_config
        self.log_computation("backward_orbit", poly=p, depth=config.depth, cap=config.cap)
        solver = RootSolver.from_config(self.config_manager.section("dynamics"), config.tol)
        orbit = backward_orbit(p, args.seed, depth=config.depth, cap=config.cap, tol=config.tol,
                               threads=config.worker_count, solver=solver)
        if orbit.depth == 0:
            self.log_info("depth 0: nothing to write")
            return 0
        if config.output_path:
            with open(config.output_path, "w") as f:
                count = write_cloud_csv(orbit.final, f)
            self.log_info(f"Wrote {count} points to {config.output_path}")
        else:
            write_cloud_csv(orbit.final, out)
        if orbit.thinned_levels:
            self.log_info(f"Thinned levels: {orbit.thinned_levels}")
        return 0


class JuliaCommand(Command):
    name = "julia"
    help = "Escape-time raster of the filled Julia set of P_G as binary PPM"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", nargs="?", help="graph6 string")
        parser.add_argument("--poly", help="render this polynomial instead of P_G")
        parser.add_argument("--out", required=True, help="PPM file")
        parser.add_argument("--window", type=_window_arg,
                            help="re_min,re_max,im_min,im_max (default: square of the escape radius)")
        parser.add_argument("--width", type=int, help="pixels")
        parser.add_argument("--height", type=int, help="pixels")
        parser.add_argument("--max-iter", type=int, help="iteration budget per pixel")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        p = _reduced_poly(self, args)
        raster_config = self.config_manager.section("raster")
        width = args.width or raster_config["width"]
        height = args.height or raster_config["height"]
        max_iter = args.max_iter or raster_config["max_iter"]
        window: Optional[Window] = args.window
        if window is None:
            radius = escape_radius(p)
            window = Window(-radius, radius, -radius, radius)
        self.log_computation("filled_julia_raster", poly=p, width=width, height=height, max_iter=max_iter)
        raster = filled_julia_raster(p, window, width, height, max_iter)
        write_raster_ppm(raster, args.out)
        self.log_info(f"Wrote {width}x{height} raster to {args.out}")
        return 0
