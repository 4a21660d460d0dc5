"""Canonical parametrizations and completion to the maximal representative.

Completing a graph adds every missing edge; on the complete graph each context
is a single state, and a canonical parametrization there determines, and is
determined by, the transition system.  Two models are therefore equivalent iff
their canonized completions coincide.
"""

from __future__ import annotations

import math

from .errors import CapacityError, DomainError, StructuralError
from .model import (
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    coarsen_context,
    contexts,
    current_limits,
    edge_order,
    same_state_space,
)


def _self_interval(graph: RegulatoryGraph, v: str):
    i = graph.position(v)
    return lambda ctx: ctx[i]


def is_canonical(graph: RegulatoryGraph, params: Parametrization) -> bool:
    for v in graph.names:
        own = _self_interval(graph, v)
        for ctx, val in params[v].items():
            j, k = own(ctx)
            if not j - 1 <= val <= k:
                return False
    return True


def canonize(graph: RegulatoryGraph, params: Parametrization) -> Model:
    """Clamp every parameter into ``[j - 1, k]`` for its self-interval ``[j, k)``."""
    tables = {}
    for v in graph.names:
        own = _self_interval(graph, v)
        tables[v] = {}
        for ctx, val in params[v].items():
            j, k = own(ctx)
            tables[v][ctx] = min(max(val, j - 1), k)
    return Model(graph, Parametrization(tables))


def _refine(old: RegulatoryGraph, new: RegulatoryGraph, params: Parametrization, v: str) -> dict:
    """Table of ``v`` over ``new`` copying each value from the enclosing old context."""
    table = params[v]
    return {c: table[coarsen_context(old, v, c)] for c in contexts(new, v)}


def add_edge(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> Model:
    """Add ``edge`` and split the affected contexts, each half keeping the old value."""
    edge = Edge(*edge)
    u, n, v = edge
    if not 1 <= n <= graph.rho(u):
        raise StructuralError(f"threshold of {edge} outside [1, {graph.rho(u)}]")
    graph.position(v)
    if edge in graph.edges:
        return Model(graph, params)
    new = graph.with_edges(graph.edges | {edge})
    return Model(new, params.replace(v, _refine(graph, new, params, v)))


def complete_step(graph: RegulatoryGraph, params: Parametrization, edge: Edge | None = None) -> Model:
    """Add the smallest missing edge (or ``edge``, if given); identity on complete graphs."""
    if edge is None:
        missing = graph.missing_edges()
        if not missing:
            return Model(graph, params)
        edge = min(missing, key=edge_order(graph))
    return add_edge(graph, params, edge)


def complete(graph: RegulatoryGraph, params: Parametrization) -> Model:
    """Fixed point of ``complete_step``: the complete graph with copied parameters.

    Refines every table in one pass; the result is identical to iterating
    ``complete_step`` until no edge is missing.
    """
    full = graph.with_edges(graph.all_edges())
    per_component = math.prod(r + 1 for r in graph.max_levels)
    cap = current_limits().max_contexts
    if per_component > cap:
        raise CapacityError("max-contexts", cap, per_component)
    tables = {v: _refine(graph, full, params, v) for v in graph.names}
    return Model(full, Parametrization(tables))


def complete_iteratively(graph: RegulatoryGraph, params: Parametrization) -> tuple[Model, int]:
    """Iterate ``complete_step`` to its fixed point; also return the step count."""
    steps = 0
    model = Model(graph, params)
    while not model.graph.is_complete():
        model = complete_step(*model)
        steps += 1
    return model, steps


def check_same_space(a: RegulatoryGraph, b: RegulatoryGraph) -> None:
    if not same_state_space(a, b):
        raise DomainError(
            "models live on different state spaces: "
            f"{list(a.components)} vs {list(b.components)}"
        )


def equivalent_by_completion(g1: RegulatoryGraph, k1: Parametrization, g2: RegulatoryGraph, k2: Parametrization) -> bool:
    check_same_space(g1, g2)
    return canonize(*complete(g1, k1)) == canonize(*complete(g2, k2))
