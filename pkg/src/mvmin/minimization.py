"""Removal of non-observable edges from normalized models.

On a normalized parametrization an edge without effect on the dynamics has
equal values on both sides of its threshold, so it can be dropped and the two
halves of each split context merged.  Iterating this from ``normalize(G, K)``
gives the minimal representative of the model's equivalence class.
"""

from __future__ import annotations

from typing import Callable

from .completion import check_same_space
from .errors import ContractError
from .model import (
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    coarsen_context,
    contexts,
    edge_order,
)
from .normalization import is_normalized, normalize, observable_in_param

EdgeKey = Callable[[Edge], object]


def hidden_edges(graph: RegulatoryGraph, normal: Parametrization) -> list[Edge]:
    """Edges with no effect in a normalized parametrization."""
    return [e for e in graph.sorted_edges if not observable_in_param(graph, normal, e)]


def remove_edge(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> Model:
    """Drop ``edge`` and merge each pair of contexts it used to separate."""
    u, n, v = edge
    new = graph.with_edges(graph.edges - {edge})
    table = params[v]
    # the lower corner of a merged context lies in the lower half of the split
    merged = {c: table[coarsen_context(graph, v, c)] for c in contexts(new, v)}
    return Model(new, params.replace(v, merged))


def _step(graph: RegulatoryGraph, normal: Parametrization, order: EdgeKey | None) -> Model:
    candidates = hidden_edges(graph, normal)
    if not candidates:
        return Model(graph, normal)
    edge = min(candidates, key=order or edge_order(graph))
    return remove_edge(graph, normal, edge)


def minimize_step(graph: RegulatoryGraph, normal: Parametrization, order: EdgeKey | None = None) -> Model:
    """Remove the smallest non-observable edge of a normalized model.

    ``order`` is a sort key over edges; the default is (source index, target
    index, threshold).  Raises ContractError if ``normal`` is not normalized.
    """
    if not is_normalized(graph, normal):
        raise ContractError("minimize_step needs a normalized parametrization")
    return _step(graph, normal, order)


def minimize(graph: RegulatoryGraph, params: Parametrization, order: EdgeKey | None = None) -> Model:
    """Normalize, then remove non-observable edges until none is left."""
    graph, normal = normalize(graph, params)
    key = order or edge_order(graph)

    def hidden_into(g, k, v):
        return {
            e for e in g.edges if e.target == v and not observable_in_param(g, k, e)
        }

    # removing an edge only rewrites the table of its target
    hidden = {v: hidden_into(graph, normal, v) for v in graph.names}
    while any(hidden.values()):
        edge = min((e for es in hidden.values() for e in es), key=key)
        graph, normal = remove_edge(graph, normal, edge)
        hidden[edge.target] = hidden_into(graph, normal, edge.target)
    return Model(graph, normal)


def equivalent_by_minimization(g1: RegulatoryGraph, k1: Parametrization, g2: RegulatoryGraph, k2: Parametrization) -> bool:
    check_same_space(g1, g2)
    return minimize(g1, k1) == minimize(g2, k2)
