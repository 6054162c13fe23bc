"""
Invariant suite.

Each check returns (passed, detail). A check that raises is reported as a
failure through safe_call, so one broken module never hides the others.
The quick suite runs in seconds; full=True adds the enumeration counts,
the realization pipeline and the backward-orbit convergence checks.
"""

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .classifier import AttractorClass, AttractorClassifier, FractalRelation, circle_check, classification_sweep, exclude_k5
from .dynamics.hausdorff import hausdorff_to_segment
from .dynamics.orbit import backward_orbit
from .dynamics.roots import RootSolver
from .graphs.canonical import canonical_form
from .graphs.counting import graph_stats, independence_polynomial, independence_polynomial_bruteforce
from .graphs.graph import (
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    lexicographic_product,
    path_graph,
    random_graph,
    relabel,
)
from .graphs.graph6 import parse_graph6, write_graph6
from .polynomials.chebyshev import ConjugationParams, binomial_bound_holds, conjugacy_holds, conjugate_coefficients, segment_candidate
from .polynomials.intpoly import IntPoly, compose, reduced
from .search.components import (
    FOUR_COMPONENTS,
    THREE_COMPONENTS,
    TWO_COMPONENTS_13,
    TWO_COMPONENTS_22,
    cross_check,
    solve_components,
)
from .search.enumeration import EnumConstraints, enumerate_complements, enumerate_graphs, verify_enumeration
from .search.realization import Verdict, realize_disconnected
from .utils.config import ConfigManager
from .utils.error_handler import safe_call

logger = logging.getLogger('indatt.verify')

CheckOutcome = Tuple[bool, str]

HAUSDORFF_LIMIT = 0.05

# Expected possible rows per case and k; k absent means no rows
EXPECTED_COMPONENTS = {
    FOUR_COMPONENTS: {},
    THREE_COMPONENTS: {3: [(9, 1, 3, 12), (9, 3, 1, 12)]},
    TWO_COMPONENTS_22: {3: [(3, 9, 4, 12), (9, 3, 12, 4)], 4: [(8, 8, 8, 8)]},
    TWO_COMPONENTS_13: {3: [(1, 27, 15, 45), (3, 9, 13, 21)]},
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def segment_fixtures() -> List[Tuple[str, object, int]]:
    """(name, graph, k) for graphs whose attractor is [-4/k, 0]."""
    co_cycle8 = complement(cycle_graph(8))
    co_sparse12 = complement(disjoint_union(cycle_graph(9), empty_graph(3)))
    k4_pair = disjoint_union(complete_graph(4), complete_graph(4))
    return [
        ("K4+K4+K1", disjoint_union(k4_pair, complete_graph(1)), 4),
        ("coC8+coC8", disjoint_union(co_cycle8, co_cycle8), 4),
        ("P4+co(C9+3K1)", disjoint_union(path_graph(4), co_sparse12), 3),
    ]


class InvariantSuite:
    """Runs the invariant checks of every module."""

    def __init__(self, config_manager: Optional[ConfigManager] = None, full: bool = False, threads: int = 1):
        """
        Initialize the suite.

        Args:
            config_manager: Supplies the seed and the random-graph count
            full: Include the slow checks
            threads: Worker threads for backward orbits
        """
        config_manager = config_manager or ConfigManager()
        section = config_manager.section("verify")
        self.seed = section["seed"]
        self.random_graphs = section["random_graphs"]
        self.max_vertices = config_manager.get("enumeration", "max_vertices")
        self.solver = RootSolver.from_config(config_manager.section("dynamics"))
        self.full = full
        self.threads = threads

    def _rng(self, salt: int) -> random.Random:
        return random.Random(self.seed + salt)

    def checks(self) -> List[Tuple[str, Callable[[], CheckOutcome]]]:
        quick = [
            ("graph6 round trip", self.check_graph6),
            ("canonical form invariance", self.check_canonical),
            ("independence polynomial oracle", self.check_bruteforce),
            ("composition identity", self.check_composition),
            ("conjugate coefficients", self.check_conjugate_coefficients),
            ("segment conjugacy", self.check_conjugacy),
            ("binomial bound", self.check_binomial_bound),
            ("edge and degree identities", self.check_identities),
            ("triangle bound equality", self.check_triangle_equality),
            ("a=5/2 exclusion", self.check_exclusion),
            ("component tables", self.check_components),
            ("component cross-check", self.check_cross_oracle),
            ("closed-form orbits", self.check_closed_form_orbits),
            ("multiplicity at -1", self.check_multiplicity),
            ("segment fixtures", self.check_segment_fixtures),
            ("circle check", self.check_circle),
            ("path enumeration", self.check_path_enumeration),
            ("no small disconnected graphs", self.check_small_k_realizations),
        ]
        slow = [
            ("8-vertex sweep", self.check_sweep),
            ("8-vertex enumeration", self.check_enumeration_8),
            ("12-vertex enumeration", self.check_enumeration_12),
            ("k=4 realizations", self.check_realizations_k4),
            ("k=3 realizations", self.check_realizations_k3),
            ("segment convergence", self.check_convergence),
        ]
        return quick + slow if self.full else quick

    def run(self) -> List[CheckResult]:
        results = []
        for name, check in self.checks():
            started = time.perf_counter()
            outcome = safe_call(None)(check)()
            elapsed = time.perf_counter() - started
            if outcome is None:
                result = CheckResult(name, False, "raised an exception", elapsed)
            else:
                result = CheckResult(name, bool(outcome[0]), outcome[1], elapsed)
            level = logging.INFO if result.passed else logging.ERROR
            logger.log(level, f"{name}: {'pass' if result.passed else 'FAIL'} ({result.detail})")
            results.append(result)
        return results

    # graph-core

    def check_graph6(self) -> CheckOutcome:
        rng = self._rng(1)
        for _ in range(self.random_graphs):
            g = random_graph(rng.randint(1, 20), rng.random(), rng)
            if parse_graph6(write_graph6(g)) != g:
                return False, f"round trip fails for {write_graph6(g)}"
        if write_graph6(path_graph(4)) != "Ch":
            return False, f"P4 encodes as {write_graph6(path_graph(4))}"
        return True, f"{self.random_graphs} random graphs"

    def check_canonical(self) -> CheckOutcome:
        rng = self._rng(2)
        for _ in range(self.random_graphs):
            g = random_graph(rng.randint(1, 10), rng.random(), rng)
            order = list(range(g.n))
            rng.shuffle(order)
            if canonical_form(relabel(g, order)) != canonical_form(g):
                return False, f"form changes under relabeling for {write_graph6(g)}"
        return True, f"{self.random_graphs} random relabelings"

    def check_bruteforce(self) -> CheckOutcome:
        rng = self._rng(3)
        for _ in range(self.random_graphs):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            if independence_polynomial(g) != independence_polynomial_bruteforce(g):
                return False, f"mismatch for {write_graph6(g)}"
        return True, f"{self.random_graphs} random graphs"

    def check_composition(self) -> CheckOutcome:
        rng = self._rng(4)
        graphs = [random_graph(rng.randint(2, 10), rng.random(), rng) for _ in range(20)]
        graphs += [path_graph(4), complete_graph(2)]
        for g in graphs:
            i = independence_polynomial(g)
            if independence_polynomial(lexicographic_product(g, g)) != compose(i, reduced(i)):
                return False, f"I(G[G]) != I(I(z) - 1) for {write_graph6(g)}"
        return True, f"{len(graphs)} graphs"

    def check_identities(self) -> CheckOutcome:
        rng = self._rng(5)
        count = max(self.random_graphs, 1000) if self.full else self.random_graphs
        for _ in range(count):
            stats = graph_stats(random_graph(rng.randint(1, 12), rng.random(), rng))
            if not (stats.edge_identity_holds() and stats.degree_identity_holds() and stats.triangle_bound_holds()):
                return False, f"identity fails for {stats.as_dict()}"
        return True, f"{count} random graphs"

    def check_triangle_equality(self) -> CheckOutcome:
        for n in (4, 5):
            stats = graph_stats(complete_graph(n))
            if stats.T != stats.triangle_bound():
                return False, f"K{n}: T={stats.T}, bound={stats.triangle_bound()}"
        return True, "K4, K5"

    # chebyshev

    def check_conjugate_coefficients(self) -> CheckOutcome:
        for k in range(1, 5):
            got = conjugate_coefficients(ConjugationParams(Fraction(k, 2), 4))
            if got != [16, 20 * k, 8 * k * k, k ** 3]:
                return False, f"n=4, k={k}: {got}"
        got = conjugate_coefficients(ConjugationParams(Fraction(2), 3))
        if got != [9, 24, 16]:
            return False, f"n=3, a=2: {got}"
        return True, "n=4 for k=1..4 and n=3 for k=4"

    def check_conjugacy(self) -> CheckOutcome:
        for n in range(2, 9):
            for k in range(1, 5):
                if not conjugacy_holds(segment_candidate(n, k), n, k):
                    return False, f"n={n}, k={k}"
        return True, "n=2..8, k=1..4"

    def check_binomial_bound(self) -> CheckOutcome:
        failing = [n for n in range(3, 51) if not binomial_bound_holds(n)]
        return not failing, f"fails for {failing}" if failing else "n=3..50"

    def check_exclusion(self) -> CheckOutcome:
        failing = [n for n in range(2, 51) if not exclude_k5(n).violated]
        return not failing, f"not excluded for {failing}" if failing else "n=2..50"

    # search

    def check_components(self) -> CheckOutcome:
        for case, expected in EXPECTED_COMPONENTS.items():
            for k in range(1, 5):
                got = [s.params for s in solve_components(case, k)]
                if got != expected.get(k, []):
                    return False, f"{case} k={k}: {got}"
        return True, "4 cases, k=1..4"

    def check_cross_oracle(self) -> CheckOutcome:
        for k in range(1, 5):
            check = cross_check(k)
            if not check.agrees:
                return False, f"k={k}: solver {check.solver} vs factorization {check.oracle}"
        return True, "k=1..4"

    def check_path_enumeration(self) -> CheckOutcome:
        constraints = EnumConstraints(4, 3, 0, 0, True)
        graphs = enumerate_complements(constraints)
        if len(graphs) != 1 or write_graph6(graphs[0]) != write_graph6(path_graph(4)):
            return False, f"got {[write_graph6(g) for g in graphs]}"
        return True, "exactly P4"

    def _enumeration_check(self, constraints: EnumConstraints, at_least: int) -> CheckOutcome:
        graphs = enumerate_complements(constraints, max_vertices=self.max_vertices)
        problems = verify_enumeration(graphs, constraints)
        if problems:
            return False, problems[0]
        return len(graphs) >= at_least, f"{len(graphs)} classes (need >= {at_least})"

    def check_enumeration_8(self) -> CheckOutcome:
        return self._enumeration_check(EnumConstraints(8, 8, 0, 0, True), 25)

    def check_enumeration_12(self) -> CheckOutcome:
        return self._enumeration_check(EnumConstraints(12, 9, 0, 0, True), 10)

    def check_small_k_realizations(self) -> CheckOutcome:
        found = {k: len(realize_disconnected(k)) for k in (1, 2)}
        return not any(found.values()), f"splits per k: {found}"

    def check_realizations_k4(self) -> CheckOutcome:
        realizations = realize_disconnected(4, max_vertices=self.max_vertices)
        total = sum(r.graph_count or 0 for r in realizations)
        return total >= 325, f"{total} disconnected graphs"

    def check_realizations_k3(self) -> CheckOutcome:
        target = (IntPoly((1, 4, 3)), IntPoly((1, 12, 9)))
        for r in realize_disconnected(3, max_vertices=self.max_vertices):
            if r.solution.factor_multiset() == target:
                if r.verdict is not Verdict.REALIZABLE:
                    return False, f"verdict {r.verdict.value}"
                sample = list(r.examples(limit=3))
                return r.graph_count >= 10, f"{r.graph_count} graphs, {len(sample)} unions re-verified"
        return False, "split (1+4z+3z^2)(1+12z+9z^2) missing"

    # dynamics

    def check_closed_form_orbits(self) -> CheckOutcome:
        for n in (2, 3, 5):
            p = reduced(independence_polynomial(complete_graph(n)))
            orbit = backward_orbit(p, -1, depth=6, solver=self.solver)
            for m, cloud in enumerate(orbit, start=1):
                if len(cloud) != 1 or abs(cloud.points[0] + 1 / n ** m) > 1e-12:
                    return False, f"K{n} level {m}: {cloud.as_list()}"
        for n in (2, 3, 4):
            p = reduced(independence_polynomial(empty_graph(n)))
            orbit = backward_orbit(p, -1, depth=5, solver=self.solver)
            for m, cloud in enumerate(orbit, start=1):
                if len(cloud) != 1 or abs(cloud.points[0] + 1) > 1e-9:
                    return False, f"{n}K1 level {m}: {cloud.as_list()}"
        return True, "K2, K3, K5 and 2K1, 3K1, 4K1"

    def check_multiplicity(self) -> CheckOutcome:
        classifier = AttractorClassifier({"corroborate": False})
        g = disjoint_union(path_graph(2), empty_graph(2))
        report = classifier.report(g)
        if report.minus_one_multiplicity != 2 or report.fractal_relation is not FractalRelation.DISJOINT_UNION:
            return False, f"P2+2K1: multiplicity {report.minus_one_multiplicity}"
        for name, fixture, _ in segment_fixtures():
            if classifier.report(fixture).minus_one_multiplicity > 1:
                return False, f"{name}: -1 is a multiple root"
        return True, "P2+2K1 and segment fixtures"

    def check_segment_fixtures(self) -> CheckOutcome:
        classifier = AttractorClassifier({"corroborate": False})
        for name, g, k in segment_fixtures():
            report = classifier.report(g)
            if report.klass is not AttractorClass.SEGMENT or report.k != k:
                return False, f"{name}: {report.klass.value} k={report.k}"
        return True, ", ".join(name for name, _, _ in segment_fixtures())

    def check_circle(self) -> CheckOutcome:
        rng = self._rng(6)
        graphs = [g for n in range(2, 6) for g in enumerate_graphs(n)]
        graphs += [random_graph(rng.randint(2, 14), rng.random(), rng) for _ in range(self.random_graphs)]
        for g in graphs:
            if circle_check(reduced(independence_polynomial(g))) != (g.edge_count() == 0):
                return False, f"circle check wrong for {write_graph6(g)}"
        return True, f"{len(graphs)} graphs"

    def check_sweep(self) -> CheckOutcome:
        rng = self._rng(7)
        graphs = [g for n in range(1, 9) for g in enumerate_graphs(n)]
        graphs += [random_graph(rng.randint(9, 16), rng.random(), rng) for _ in range(500)]
        summary = classification_sweep(graphs)
        if summary.violations:
            return False, summary.violations[0]
        return True, f"{summary.total} graphs: {summary.counts}"

    def check_convergence(self) -> CheckOutcome:
        cases = [(4, k) for k in range(1, 5)] + [(3, 4)]
        for n, k in cases:
            r = 4 / k
            orbit = backward_orbit(segment_candidate(n, k), -1, depth=12, cap=200000,
                                   threads=self.threads, solver=self.solver)
            distances = [hausdorff_to_segment(orbit[m], r) for m in range(3, 13)]
            slack = r / 1e4
            if any(later > earlier + slack for earlier, later in zip(distances, distances[1:])):
                return False, f"n={n}, k={k}: distances increase {distances}"
            if distances[10 - 3] > HAUSDORFF_LIMIT:
                return False, f"n={n}, k={k}: level 10 distance {distances[7]:.4f}"
        return True, f"{len(cases)} segment polynomials to depth 12"


def run_suite(config_manager: Optional[ConfigManager] = None, full: bool = False,
              threads: int = 1) -> List[CheckResult]:
    return InvariantSuite(config_manager, full=full, threads=threads).run()
