"""
Polynomial subcommands: ipoly, product, power, factor, cheb.
"""

import argparse
import logging
from typing import TextIO

from .base_command import Command
from ..graphs.counting import independence_polynomial
from ..graphs.graph import lexicographic_product
from ..polynomials.chebyshev import SEGMENT_INDICES, conjugacy_holds, segment_candidate, segment_edge_count
from ..polynomials.factorization import factorizations_positive, nontrivial_factorizations
from ..polynomials.intpoly import IntPoly, add, estimate_iterate_digits, format_poly, iterate, max_coefficient_digits, reduced
from ..report import ReportFormatter
from ..utils.error_handler import CoefficientOverflowError, ConfigError

logger = logging.getLogger('indatt.commands.polynomial')


class IpolyCommand(Command):
    name = "ipoly"
    help = "Independence polynomial of a graph"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", help="graph6 string")
        parser.add_argument("--reduced", action="store_true", help="print I_G - 1")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        g = self.read_graph(args.graph)
        self.log_computation("independence_polynomial", graph=args.graph)
        i = independence_polynomial(g)
        self.write_line(out, format_poly(reduced(i) if args.reduced else i))
        return 0


class ProductCommand(Command):
    name = "product"
    help = "Independence polynomial of the lexicographic product G[H]"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("outer", help="graph6 string of G")
        parser.add_argument("inner", help="graph6 string of H")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        g, h = self.read_graph(args.outer), self.read_graph(args.inner)
        self.log_computation("lexicographic_product", outer=args.outer, inner=args.inner)
        self.write_line(out, format_poly(independence_polynomial(lexicographic_product(g, h))))
        return 0


class PowerCommand(Command):
    name = "power"
    help = "Independence polynomial of the m-th lexicographic power, P^m + 1"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", help="graph6 string")
        parser.add_argument("-m", type=int, required=True, help="power (>= 1)")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        if args.m < 1:
            raise ConfigError(f"-m must be at least 1, got {args.m}")
        p = reduced(independence_polynomial(self.read_graph(args.graph)))
        digits = estimate_iterate_digits(p, args.m)
        if digits > max_coefficient_digits():
            raise CoefficientOverflowError(
                f"I of the {args.m}-th power would have coefficients of about {digits:.0f} digits "
                f"(limit {max_coefficient_digits()}); use 'attractor' for its roots instead",
                details={"digits": digits, "m": args.m}
            )
        self.log_computation("iterate", graph=args.graph, m=args.m)
        self.write_line(out, format_poly(add(iterate(p, args.m), IntPoly.constant(1))))
        return 0


class FactorCommand(Command):
    name = "factor"
    help = "Factorizations into polynomials with positive integer coefficients"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--poly", required=True, help='target, e.g. "1+16z+60z^2+72z^3+27z^4"')
        parser.add_argument("--nontrivial", action="store_true", help="skip the single-factor entry")
        parser.add_argument("--json", action="store_true", help="JSON output")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        target = self.read_poly(args.poly)
        self.log_computation("factorizations_positive", poly=args.poly)
        found = nontrivial_factorizations(target) if args.nontrivial else factorizations_positive(target)
        self.log_info(f"{len(found)} factorizations")
        self.write_line(out, ReportFormatter("json" if args.json else "text").factorizations(target, found))
        return 0


class ChebCommand(Command):
    name = "cheb"
    help = "Segment candidates: polynomials affinely conjugate to T_n"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="independence number (>= 2)")
        parser.add_argument("--k", type=int, choices=SEGMENT_INDICES, help="segment index; all if omitted")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        if args.n < 2:
            raise ConfigError(f"--n must be at least 2, got {args.n}")
        indices = [args.k] if args.k else list(SEGMENT_INDICES)
        for k in indices:
            p = segment_candidate(args.n, k)
            i = add(p, IntPoly.constant(1))
            self.write_line(
                out,
                f"k={k} I={format_poly(i)} vertices={args.n * args.n} "
                f"complementEdges={segment_edge_count(args.n, k)} conjugacy={str(conjugacy_holds(p, args.n, k)).lower()}"
            )
        return 0
