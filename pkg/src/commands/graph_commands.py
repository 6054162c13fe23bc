"""
Graph subcommands: stats, classify.
"""

import argparse
import logging
from typing import TextIO

from .base_command import Command
from ..classifier import AttractorClassifier
from ..dynamics.roots import RootSolver
from ..graphs.counting import graph_stats
from ..report import ReportFormatter

logger = logging.getLogger('indatt.commands.graph')


class StatsCommand(Command):
    name = "stats"
    help = "Vertex, edge, triangle and K4 counts with the edge-local identities"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", help="graph6 string")
        parser.add_argument("--json", action="store_true", help="JSON output")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        g = self.read_graph(args.graph)
        self.log_computation("graph_stats", graph=args.graph)
        self.write_line(out, ReportFormatter("json" if args.json else "text").graph_stats(graph_stats(g)))
        return 0


class ClassifyCommand(Command):
    name = "classify"
    help = "Classify the independence attractor of a graph"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", help="graph6 string")
        parser.add_argument("--json", action="store_true", help="JSON report")
        parser.add_argument("--no-corroborate", action="store_true",
                            help="skip the backward-orbit check of Segment results")
        parser.add_argument("--depth", type=int, help="depth of the backward-orbit check")
        parser.add_argument("--cap", type=int, help="point cap of the backward-orbit check")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        g = self.read_graph(args.graph)
        self.log_computation("classify", graph=args.graph)
        settings = dict(self.config_manager.section("classifier"))
        # Command-line values were range-checked by CliConfig
        if args.depth is not None:
            settings["depth"] = self.cli_config.depth
        if args.cap is not None:
            settings["cap"] = self.cli_config.cap
        classifier = AttractorClassifier(
            settings,
            solver=RootSolver.from_config(self.config_manager.section("dynamics"), self.cli_config.tol),
            threads=self.cli_config.worker_count,
        )
        report = classifier.report(g, corroborate=False if args.no_corroborate else None)
        self.write_line(out, ReportFormatter("json" if args.json else "text").attractor_report(report))
        return 0
