"""Update function and the asynchronous and synchronous transition systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .model import (
    Parametrization,
    RegulatoryGraph,
    State,
    _layout,
    context_of,
    states,
    substitute,
)


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def update(graph: RegulatoryGraph, params: Parametrization, v: str, state: Sequence[int]) -> int:
    """Next level of ``v``: one step towards the parameter of the state's context."""
    target = params.value(v, context_of(graph, v, state))
    x = state[graph.position(v)]
    return x + sgn(target - x)


def derivative(graph: RegulatoryGraph, params: Parametrization, v: str, state: Sequence[int]) -> int:
    """Sign of the step of ``v`` in ``state``: -1, 0 or +1."""
    return update(graph, params, v, state) - state[graph.position(v)]


@dataclass(frozen=True)
class TransitionSystem:
    """State graph in canonical form: transitions sorted by (source, target)."""

    dimensions: tuple[tuple[str, int], ...]
    transitions: tuple[tuple[State, State], ...]

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(sorted(set(self.transitions))))

    def successors(self, state: State) -> list[State]:
        return [t for s, t in self.transitions if s == state]


def _update_function(graph: RegulatoryGraph, params: Parametrization):
    """Per-component closures computing the next level, with lookups hoisted."""
    fns = []
    for i, v in enumerate(graph.names):
        lookup = _layout(graph, v).lookup
        table = params[v]

        def f(s, i=i, lookup=lookup, table=table):
            target = table[tuple(lk[x] for lk, x in zip(lookup, s))]
            x = s[i]
            return x + (target > x) - (target < x)

        fns.append(f)
    return fns


def async_ts(graph: RegulatoryGraph, params: Parametrization) -> TransitionSystem:
    """Asynchronous dynamics: each transition moves one component by one unit."""
    fns = _update_function(graph, params)
    trans = []
    for s in states(graph):
        for i, f in enumerate(fns):
            n = f(s)
            if n != s[i]:
                trans.append((s, substitute(s, i, n)))
    return TransitionSystem(graph.components, tuple(trans))


def sync_ts(graph: RegulatoryGraph, params: Parametrization) -> TransitionSystem:
    """Synchronous dynamics: one successor per state; fixed points keep a self-loop."""
    fns = _update_function(graph, params)
    trans = [(s, tuple(f(s) for f in fns)) for s in states(graph)]
    return TransitionSystem(graph.components, tuple(trans))


def ts_equal(a: TransitionSystem, b: TransitionSystem) -> bool:
    return a.dimensions == b.dimensions and a.transitions == b.transitions
