"""
Search subcommands: tables, enumerate, realize.
"""

import argparse
import logging
import sys
from typing import TextIO

from .base_command import Command
from ..graphs.graph import complement
from ..graphs.graph6 import write_graph6
from ..polynomials.chebyshev import SEGMENT_INDICES
from ..report import ReportFormatter
from ..search.components import CASE_ALIASES, CASES, dedup_solutions, resolve_case, table_rows
from ..search.enumeration import constraints_from_poly, enumerate_complements
from ..search.realization import realize_disconnected

logger = logging.getLogger('indatt.commands.search')


def _format(args: argparse.Namespace) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return "text"


class TablesCommand(Command):
    name = "tables"
    help = "Component tables for the 16-vertex segment polynomials"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--k", type=int, required=True, choices=SEGMENT_INDICES, help="segment index")
        parser.add_argument("--case", required=True, choices=list(CASE_ALIASES) + list(CASES),
                            help="component case")
        parser.add_argument("--all", action="store_true", help="include the 'Not possible' rows")
        parser.add_argument("--dedup", action="store_true", help="collapse rows with the same factors")
        output = parser.add_mutually_exclusive_group()
        output.add_argument("--json", action="store_true", help="JSON output")
        output.add_argument("--csv", action="store_true", help="CSV output")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        case = resolve_case(args.case)
        self.log_computation("table_rows", case=case, k=args.k)
        rows = table_rows(case, args.k)
        if not args.all:
            rows = [row for row in rows if row.possible]
        if args.dedup:
            kept = {id(s) for s in dedup_solutions([r.solution for r in rows if r.solution])}
            rows = [row for row in rows if row.solution is None or id(row.solution) in kept]
        self.write_line(out, ReportFormatter(_format(args)).table(case, args.k, rows))
        return 0


class EnumerateCommand(Command):
    name = "enumerate"
    help = "Isomorph-free enumeration of complements of graphs with a given independence polynomial"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--poly", required=True, help='target, e.g. "1+8z+8z^2"')
        parser.add_argument("--co-connected", action="store_true",
                            help="keep only graphs whose complement is connected")
        parser.add_argument("--realized", action="store_true",
                            help="print the realizing graphs instead of their complements")
        parser.add_argument("--progress", action="store_true", help="progress bar on stderr")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        target = self.read_poly(args.poly)
        constraints = constraints_from_poly(target, args.co_connected)
        enumeration = self.config_manager.section("enumeration")
        self.log_computation("enumerate_complements", poly=args.poly, co_connected=args.co_connected)
        graphs = enumerate_complements(
            constraints,
            target=target,
            max_vertices=enumeration["max_vertices"],
            progress=args.progress or enumeration["progress"],
        )
        for g in graphs:
            self.write_line(out, write_graph6(complement(g) if args.realized else g))
        sys.stderr.write(f"{len(graphs)} graphs\n")
        return 0


class RealizeCommand(Command):
    name = "realize"
    help = "Disconnected graphs with segment attractor [-4/k, 0] on 16 vertices"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--k", type=int, required=True, choices=SEGMENT_INDICES, help="segment index")
        parser.add_argument("--examples", type=int, default=0,
                            help="also print up to this many disconnected graphs per split as graph6")
        parser.add_argument("--progress", action="store_true", help="progress bars on stderr")
        output = parser.add_mutually_exclusive_group()
        output.add_argument("--json", action="store_true", help="JSON output")
        output.add_argument("--csv", action="store_true", help="CSV output")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        enumeration = self.config_manager.section("enumeration")
        self.log_computation("realize_disconnected", k=args.k)
        realizations = realize_disconnected(
            args.k,
            max_vertices=enumeration["max_vertices"],
            progress=args.progress or enumeration["progress"],
        )
        self.write_line(out, ReportFormatter(_format(args)).realizations(args.k, realizations))
        if args.examples > 0:
            for r in realizations:
                for g in r.examples(limit=args.examples):
                    self.write_line(out, write_graph6(g))
        return 0
