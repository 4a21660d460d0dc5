"""Monotone target values, normalization and edge observability.

The monotone target value (MTV) of a context is the level towards which ``v``
moves monotonically when only ``v`` is updated, until it settles or turns back.
It is shared by all states of a context and can be read off the parameter table
by walking along the self-regulation intervals of ``v``.  Replacing every
parameter by its MTV gives the normalized parametrization, on which
observability of an edge in the table and in the dynamics coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .model import (
    ActivityInterval,
    Context,
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    activity_intervals,
    extended_thresholds,
    substitute,
)


def mtv_with_depth(graph: RegulatoryGraph, params: Parametrization, v: str, ctx: Context) -> tuple[int, int]:
    """MTV of ``ctx`` plus the number of hops taken to adjacent self-intervals."""
    i = graph.position(v)
    ivs = activity_intervals(graph, v, v)
    table = params[v]
    pos = ivs.index(ctx[i])
    depth = 0
    while True:
        lo, hi = ivs[pos]
        val = table[ctx]
        if lo <= val < hi:
            return val, depth
        if val < lo:
            lower = substitute(ctx, i, ivs[pos - 1])
            if table[lower] >= lo - 1:
                return lo - 1, depth
            ctx, pos = lower, pos - 1
        else:
            upper = substitute(ctx, i, ivs[pos + 1])
            if table[upper] <= hi:
                return hi, depth
            ctx, pos = upper, pos + 1
        depth += 1


def mtv(graph: RegulatoryGraph, params: Parametrization, v: str, ctx: Context) -> int:
    """Monotone target value shared by all states of ``ctx``."""
    return mtv_with_depth(graph, params, v, ctx)[0]


def _normalize_table(graph: RegulatoryGraph, params: Parametrization, v: str) -> dict[Context, int]:
    i = graph.position(v)
    ivs = activity_intervals(graph, v, v)
    where = {iv: p for p, iv in enumerate(ivs)}
    table = params[v]
    memo: dict[Context, int] = {}

    def norm(ctx: Context) -> int:
        if ctx in memo:
            return memo[ctx]
        trail = []
        while True:
            lo, hi = ctx[i]
            val = table[ctx]
            if lo <= val < hi:
                res = val
                break
            pos = where[ctx[i]]
            nxt = substitute(ctx, i, ivs[pos - 1] if val < lo else ivs[pos + 1])
            if val < lo and table[nxt] >= lo - 1:
                res = lo - 1
                break
            if val >= hi and table[nxt] <= hi:
                res = hi
                break
            trail.append(ctx)
            ctx = nxt
            if ctx in memo:
                res = memo[ctx]
                break
        memo[ctx] = res
        for c in trail:
            memo[c] = res
        return res

    return {ctx: norm(ctx) for ctx in table}


def normalize(graph: RegulatoryGraph, params: Parametrization) -> Model:
    """Replace every parameter by the MTV of its context."""
    return Model(
        graph,
        Parametrization({v: _normalize_table(graph, params, v) for v in graph.names}),
    )


def is_normalized(graph: RegulatoryGraph, params: Parametrization) -> bool:
    return normalize(graph, params).params == params


def split_bounds(graph: RegulatoryGraph, edge: Edge) -> tuple[int, int]:
    """Neighbouring extended thresholds ``(n_minus, n_plus)`` around the edge's threshold."""
    u, n, v = edge
    ts = extended_thresholds(graph, u, v)
    p = ts.index(n)
    return ts[p - 1], ts[p + 1]


def _check_edge(graph: RegulatoryGraph, edge) -> Edge:
    edge = Edge(*edge)
    if edge not in graph.edges:
        raise DomainError(f"edge {edge} is not in the graph")
    return edge


def observable_in_param(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> bool:
    """True iff some context pair split by the edge carries different values."""
    u, n, v = edge = _check_edge(graph, edge)
    lo, hi = split_bounds(graph, edge)
    i = graph.position(u)
    above, below = ActivityInterval(n, hi), ActivityInterval(lo, n)
    table = params[v]
    for ctx, val in table.items():
        if ctx[i] == above and table[substitute(ctx, i, below)] != val:
            return True
    return False


def observable_in_ts(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> bool:
    """Whether the edge has a visible effect on the dynamics."""
    edge = _check_edge(graph, edge)
    return observable_in_param(*normalize(graph, params), edge)


@dataclass(frozen=True)
class EdgeObservability:
    edge: Edge
    observable_in_param: bool
    observable_in_ts: bool

    def line(self) -> str:
        u, n, v = self.edge
        return (
            f"edge {u} {n} {v} param={str(self.observable_in_param).lower()} "
            f"ts={str(self.observable_in_ts).lower()}"
        )


ObservabilityReport = list[EdgeObservability]


def observability_report(graph: RegulatoryGraph, params: Parametrization) -> ObservabilityReport:
    _, normal = normalize(graph, params)
    return [
        EdgeObservability(
            e,
            observable_in_param(graph, params, e),
            observable_in_param(graph, normal, e),
        )
        for e in graph.sorted_edges
    ]
