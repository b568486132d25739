"""Exact Roman domination toolkit for generalized Petersen graphs P(n, 2).

Builds the graphs, emits the explicit optimal assignments, computes true
optima by exhaustive and dynamic-programming solvers, and audits optima
against the charge-redistribution window rules that certify the lower bound.
"""

from .assignment import (
    RomanAssignment,
    ValidityReport,
    is_dominating_set,
    is_normalized,
    is_valid_rdf,
    normalize,
)
from .construction import ConstructionCase, ceil_8n_over_7, construct_rdf, gamma_formula
from .discharging import (
    HalfWeight,
    Window,
    WindowRecord,
    WindowReport,
    g_value,
    lemma_audit,
    lower_bound_audit,
    r_window,
    total_g,
)
from .errors import (
    BudgetError,
    InternalCheckError,
    InvalidAssignmentError,
    ParameterError,
    RomanPetersenError,
    SchemaError,
)
from .petersen import PetersenGraph, Ring, VertexId, build_graph, inner, outer
from .solver import SolveResult, solve_brute, solve_dp

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ConstructionCase",
    "HalfWeight",
    "InternalCheckError",
    "InvalidAssignmentError",
    "ParameterError",
    "PetersenGraph",
    "Ring",
    "RomanAssignment",
    "RomanPetersenError",
    "SchemaError",
    "SolveResult",
    "ValidityReport",
    "VertexId",
    "Window",
    "WindowRecord",
    "WindowReport",
    "build_graph",
    "ceil_8n_over_7",
    "construct_rdf",
    "g_value",
    "gamma_formula",
    "inner",
    "is_dominating_set",
    "is_normalized",
    "is_valid_rdf",
    "lemma_audit",
    "lower_bound_audit",
    "normalize",
    "outer",
    "r_window",
    "solve_brute",
    "solve_dp",
    "total_g",
]
