"""Spectral bounds for triangle-free graphs and strongly regular graph tables."""

import json as _json

from ._trifree import (
    GraphError,
    InfeasibleError,
    ParseError,
    PreconditionError,
    SolverError,
    Graph,
    blow_up,
    eigenvalues,
    f_alpha,
    hoffman_delsarte,
    is_bipartite,
    is_triangle_free,
    named_graph,
    named_graph_names,
    random_triangle_free,
    signless_laplacian_min,
    srg_recognize,
    triangle_count,
)
from . import _trifree

__all__ = [
    "GraphError", "InfeasibleError", "ParseError", "PreconditionError", "SolverError",
    "Graph", "blow_up", "eigenvalues", "enumerate_feasible", "f_alpha", "f_max",
    "feasibility", "hoffman_delsarte", "independence_number", "is_bipartite",
    "is_triangle_free", "named_graph", "named_graph_names", "random_search",
    "random_triangle_free", "scan_all", "signless_laplacian_min", "srg_recognize",
    "theorem1_check", "theorem2_chain", "trace_report", "triangle_count",
]


def trace_report(g):
    return _json.loads(_trifree._trace_report(g))


def theorem1_check(g):
    return _json.loads(_trifree._theorem1_check(g))


def independence_number(g, budget=100_000_000):
    return _json.loads(_trifree._independence_number(g, budget))


def f_max():
    return _json.loads(_trifree._f_max())


def feasibility(n, k, a, b, tier="extended"):
    return _json.loads(_trifree._feasibility(n, k, a, b, tier))


def theorem2_chain(n, k, a, b):
    return _json.loads(_trifree._theorem2_chain(n, k, a, b))


def enumerate_feasible(n_max, tier="basic", workers=1):
    return _json.loads(_trifree._enumerate_feasible(n_max, tier, workers))


def scan_all(n, workers=1):
    return _json.loads(_trifree._scan_all(n, workers))


def random_search(n, iterations, seed):
    return _json.loads(_trifree._random_search(n, iterations, seed))
