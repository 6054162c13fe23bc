"""
Search package: component splits of the 16-vertex segment polynomials,
isomorph-free enumeration, and realization of splits by graphs.
"""

from .components import (
    CASE_ALIASES,
    CASES,
    HEADERS,
    ComponentSolution,
    TableRow,
    cross_check,
    dedup_solutions,
    quartic,
    resolve_case,
    solve_components,
    table_rows,
)
from .enumeration import (
    EnumConstraints,
    constraints_from_poly,
    enumerate_complements,
    enumerate_graphs,
    enumerate_realizations,
    verify_enumeration,
)
from .realization import (
    FactorRealization,
    Realization,
    Verdict,
    count_disconnected,
    realize_disconnected,
    realize_factor,
)
