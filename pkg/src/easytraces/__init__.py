"""Exact branching-graph combinatorics and traces for easy-group diagram algebras."""

__version__ = "0.1.0"

from .young import YoungDiagram, make_diagram, dim_young, enumerate_level, cycle_type
from .graphs import BranchingGraph, Vertex, build_graph, pascalize, dim_root, dim_between
from .arrays import m_array, k_array, conjecture_check, hyperoct_dims, coupled_dim_closed_form, dim_A_n
from .diagrams import (
    AlgebraElement,
    Category,
    DeltaPolynomial,
    SetPartitionDiagram,
    algebra_mul,
    compose,
    enumerate_category,
    quotient_project,
)
from .traces import ThomaParameter, TraceConvention, thoma_trace, lifted_diagram_trace
from .report import Report

__all__ = [
    "__version__",
    "YoungDiagram", "make_diagram", "dim_young", "enumerate_level", "cycle_type",
    "BranchingGraph", "Vertex", "build_graph", "pascalize", "dim_root", "dim_between",
    "m_array", "k_array", "conjecture_check", "hyperoct_dims", "coupled_dim_closed_form", "dim_A_n",
    "AlgebraElement", "Category", "DeltaPolynomial", "SetPartitionDiagram",
    "algebra_mul", "compose", "enumerate_category", "quotient_project",
    "ThomaParameter", "TraceConvention", "thoma_trace", "lifted_diagram_trace",
    "Report",
]
