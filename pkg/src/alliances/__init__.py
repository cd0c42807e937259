"""Global defensive k-alliances on graph products: exact solvers and bound checks."""

from .alliance import (
    SolveResult,
    SolverCapError,
    dka_number,
    domination_number,
    find_1_perfect_code,
    gdka_number,
    is_defensive_k_alliance,
    is_dominating,
    is_gdka,
)
from .bounds import BoundReport, evaluate, verify_bound
from .generators import generate
from .graph import Graph, VertexSet, induced_subgraph, make_graph
from .graph6 import emit_graph6, parse_graph6
from .isomorphism import are_isomorphic
from .products import cartesian, corona, edge_corona, hierarchical, lexicographic, lift
from .values import INF, AllianceValue

__all__ = [
    "INF", "AllianceValue", "BoundReport", "Graph", "SolveResult", "SolverCapError", "VertexSet",
    "are_isomorphic", "cartesian", "corona", "dka_number", "domination_number", "edge_corona",
    "emit_graph6", "evaluate", "find_1_perfect_code", "gdka_number", "generate", "hierarchical",
    "induced_subgraph", "is_defensive_k_alliance", "is_dominating", "is_gdka", "lexicographic",
    "lift", "make_graph", "parse_graph6", "verify_bound",
]
