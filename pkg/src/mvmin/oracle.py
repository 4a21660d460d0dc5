"""Brute-force reference implementations.

Everything here is deliberately slow and literal.  It uses only the core
model types, finds contexts by scanning, and walks the state space directly,
so it can check the fast paths in ``dynamics``, ``normalization`` and
``minimization`` without sharing their code.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .errors import CapacityError
from .model import (
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    activity_intervals,
    contexts,
    current_limits,
    extended_thresholds,
    substitute,
)

DEFAULT_MAX_MODELS = 1_000_000


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1 if x < 0 else 0


def brute_delta(graph: RegulatoryGraph, params: Parametrization, v: str, s: Sequence[int]) -> int:
    """Direction of ``v`` in ``s``, locating the context by linear scan."""
    [ctx] = [c for c in contexts(graph, v) if all(x in iv for x, iv in zip(s, c))]
    x = s[graph.names.index(v)]
    k = params[v][ctx]
    if k > x:
        return 1
    if k < x:
        return -1
    return 0


def _all_states(graph: RegulatoryGraph):
    count = math.prod(r + 1 for _, r in graph.components)
    cap = current_limits().max_states
    if count > cap:
        raise CapacityError("max-states", cap, count)
    return itertools.product(*(range(r + 1) for _, r in graph.components))


def mtv_oracle(graph: RegulatoryGraph, params: Parametrization, v: str, s: Sequence[int]) -> int:
    """Walk along ``v`` from ``s`` until the direction stops being the initial one."""
    s = tuple(s)
    i = graph.names.index(v)
    d = brute_delta(graph, params, v, s)
    if d == 0:
        return s[i]
    j = s[i]
    while True:
        j += d
        if brute_delta(graph, params, v, substitute(s, i, j)) != d:
            return j


def _bounds(graph: RegulatoryGraph, edge: Edge) -> tuple[int, int]:
    u, n, v = edge
    ts = list(extended_thresholds(graph, u, v))
    p = ts.index(n)
    return ts[p - 1], ts[p + 1]


def ts_observable_oracle(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> bool:
    """Observability of ``edge`` read directly off the update directions.

    The edge is hidden iff for every state with the regulator inside
    ``[n_minus, n_plus)`` some single target level ``k`` explains the direction
    of ``v`` at every regulator level in that range.
    """
    u, n, v = edge
    lo, hi = _bounds(graph, edge)
    iu, iv = graph.names.index(u), graph.names.index(v)
    rv = graph.components[iv][1]
    for s in _all_states(graph):
        if not lo <= s[iu] < hi:
            continue
        line = [substitute(s, iu, j) for j in range(lo, hi)]
        deltas = [brute_delta(graph, params, v, t) for t in line]
        if not any(
            all(d == _sgn(k - t[iv]) for d, t in zip(deltas, line)) for k in range(rv + 1)
        ):
            return True
    return False


def ts_observable_oracle_mtv(graph: RegulatoryGraph, params: Parametrization, edge: Edge) -> bool:
    """Same verdict as ``ts_observable_oracle`` with ``k`` fixed to the MTV of ``s``."""
    u, n, v = edge
    lo, hi = _bounds(graph, edge)
    iu, iv = graph.names.index(u), graph.names.index(v)
    for s in _all_states(graph):
        if not lo <= s[iu] < hi:
            continue
        k = mtv_oracle(graph, params, v, s)
        for j in range(lo, hi):
            t = substitute(s, iu, j)
            if brute_delta(graph, params, v, t) != _sgn(k - t[iv]):
                return True
    return False


def mtv_distance(graph: RegulatoryGraph, params: Parametrization, v: str, ctx) -> int:
    """Number of self-intervals of ``v`` from ``ctx`` to the one holding its MTV."""
    i = graph.names.index(v)
    ivs = activity_intervals(graph, v, v)
    corner = tuple(iv.low for iv in ctx)
    target = mtv_oracle(graph, params, v, corner)
    [home] = [p for p, iv in enumerate(ivs) if target in iv]
    return abs(home - ivs.index(ctx[i]))


def _value_ranges(graph: RegulatoryGraph, v: str, canonical_only: bool):
    i = graph.names.index(v)
    rv = graph.components[i][1]
    out = []
    for ctx in contexts(graph, v):
        if canonical_only:
            j, k = ctx[i]
            out.append(range(max(j - 1, 0), min(k, rv) + 1))
        else:
            out.append(range(rv + 1))
    return out


def _graphs(components) -> Iterator[RegulatoryGraph]:
    base = RegulatoryGraph(tuple(components))
    every = base.all_edges()
    for mask in range(2 ** len(every)):
        yield base.with_edges(e for b, e in enumerate(every) if mask >> b & 1)


def count_models(components: Sequence[tuple[str, int]], canonical_only: bool = False) -> int:
    total = 0
    for g in _graphs(components):
        total += math.prod(
            math.prod(len(r) for r in _value_ranges(g, v, canonical_only)) for v in g.names
        )
    return total


def enumerate_models(
    components: Sequence[tuple[str, int]],
    canonical_only: bool = False,
    max_models: int = DEFAULT_MAX_MODELS,
) -> Iterator[Model]:
    """Every graph over ``components`` crossed with every total parametrization.

    Graphs come in order of the bitmask over ``all_edges()``; parametrizations
    of one graph in row-major order of the per-context values.  With
    ``canonical_only`` each value is restricted to ``[j - 1, k]`` of its
    self-interval ``[j, k)``.
    """
    components = tuple(components)
    if not components:
        return iter(())
    total = count_models(components, canonical_only)
    if total > max_models:
        raise CapacityError("max-models", max_models, total)
    return _enumerate(components, canonical_only)


def _enumerate(components, canonical_only) -> Iterator[Model]:
    for g in _graphs(components):
        per_comp = []
        for v in g.names:
            ctxs = contexts(g, v)
            tables = [
                dict(zip(ctxs, vals))
                for vals in itertools.product(*_value_ranges(g, v, canonical_only))
            ]
            per_comp.append(tables)
        for combo in itertools.product(*per_comp):
            yield Model(g, Parametrization(dict(zip(g.names, combo))))
